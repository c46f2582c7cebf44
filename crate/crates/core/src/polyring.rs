//! Homogeneous polynomials with exact rational coefficients.
//!
//! Monomials of a fixed degree are ordered graded-lex with `t1 > t2 > ...`,
//! so for `n = 3, d = 2` the order is `t1^2, t1*t2, t1*t3, t2^2, t2*t3,
//! t3^2`. Every coefficient vector in the crate uses this order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{rat_to_string, Mat, Rat};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        MultiIndex(exps)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn add(&self, o: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// `self - o` when `o <= self` componentwise.
    pub fn checked_sub(&self, o: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(MultiIndex)
    }

    /// `α! = ∏ α_i!`.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, &e| acc * factorial(e))
    }

    /// `v^α`.
    pub fn eval(&self, v: &[Rat]) -> Rat {
        self.0
            .iter()
            .zip(v)
            .fold(Rat::one(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `k!/(k-j)!`.
fn falling(k: u32, j: u32) -> BigInt {
    (k - j + 1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// All degree-`d` multi-indices in `n` variables, graded-lex order.
pub fn monomials(n: usize, d: usize) -> Vec<MultiIndex> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(MultiIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if d == 0 { vec![MultiIndex(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, d as u32, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `C(d+n-1, n-1)`, the dimension of the degree-`d` homogeneous component.
pub fn monomial_count(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    let (mut num, mut den) = (1u128, 1u128);
    for k in 1..n as u128 {
        num *= d as u128 + k;
        den *= k;
    }
    (num / den) as usize
}

/// Monomials of one degree with their positions.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    n: usize,
    d: usize,
    monos: Vec<MultiIndex>,
    index: HashMap<MultiIndex, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, d: usize) -> Self {
        let monos = monomials(n, d);
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis { n, d, monos, index }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monos(&self) -> &[MultiIndex] {
        &self.monos
    }

    pub fn position(&self, m: &MultiIndex) -> usize {
        self.index[m]
    }
}

/// A homogeneous polynomial. The zero polynomial keeps a nominal degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HPoly {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<MultiIndex, Rat>,
}

impl HPoly {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        HPoly {
            nvars,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        HPoly::monomial(MultiIndex::zero(nvars), Rat::one())
    }

    pub fn monomial(m: MultiIndex, c: Rat) -> Self {
        let mut p = HPoly::zero(m.0.len(), m.degree());
        if !c.is_zero() {
            p.coeffs.insert(m, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        HPoly::monomial(MultiIndex::unit(nvars, i), Rat::one())
    }

    /// `p_v(t) = v · t`.
    pub fn linear_form(v: &[Rat]) -> Result<Self> {
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        let n = v.len();
        let mut p = HPoly::zero(n, 1);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                p.coeffs.insert(MultiIndex::unit(n, i), c.clone());
            }
        }
        Ok(p)
    }

    pub fn from_terms(nvars: usize, degree: usize, terms: impl IntoIterator<Item = (MultiIndex, Rat)>) -> Self {
        let mut p = HPoly::zero(nvars, degree);
        for (m, c) in terms {
            assert_eq!(m.degree(), degree, "inhomogeneous term");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: MultiIndex, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: &MultiIndex) -> Rat {
        self.coeffs.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in graded-lex order, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rat)> {
        self.coeffs.iter()
    }

    pub fn add(&self, o: &HPoly) -> HPoly {
        assert_eq!(self.nvars, o.nvars);
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, o.degree, "adding polynomials of different degree");
        let mut out = self.clone();
        for (m, c) in &o.coeffs {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> HPoly {
        if c.is_zero() {
            return HPoly::zero(self.nvars, self.degree);
        }
        HPoly {
            nvars: self.nvars,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, o: &HPoly) -> HPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut acc: HashMap<MultiIndex, Rat> = HashMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &o.coeffs {
                *acc.entry(a.add(b)).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        HPoly {
            nvars: self.nvars,
            degree: self.degree + o.degree,
            coeffs: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> HPoly {
        (0..k).fold(HPoly::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Multiply by the monomial `t^m`.
    pub fn shift(&self, m: &MultiIndex) -> HPoly {
        HPoly {
            nvars: self.nvars,
            degree: self.degree + m.degree(),
            coeffs: self.coeffs.iter().map(|(a, c)| (a.add(m), c.clone())).collect(),
        }
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.coeffs
            .iter()
            .fold(Rat::zero(), |acc, (m, c)| acc + c * m.eval(point))
    }

    /// Coefficient vector over `basis` (which must have this degree).
    pub fn to_coeffs(&self, basis: &MonomialBasis) -> Vec<Rat> {
        assert!(self.is_zero() || basis.degree() == self.degree);
        let mut v = vec![Rat::zero(); basis.len()];
        for (m, c) in &self.coeffs {
            v[basis.position(m)] = c.clone();
        }
        v
    }

    pub fn from_coeffs(basis: &MonomialBasis, v: &[Rat]) -> HPoly {
        HPoly {
            nvars: basis.nvars(),
            degree: basis.degree(),
            coeffs: basis
                .monos()
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

/// `∏_{v} p_v`, the product of the linear forms of `vectors`.
pub fn linform_product(n: usize, vectors: &[&[Rat]]) -> Result<HPoly> {
    let mut p = HPoly::one(n);
    for v in vectors {
        p = p.mul(&HPoly::linear_form(v)?);
    }
    Ok(p)
}

/// `(p(D)) q`.
pub fn diff_apply(p: &HPoly, q: &HPoly) -> HPoly {
    assert_eq!(p.nvars, q.nvars);
    if p.degree > q.degree || p.is_zero() || q.is_zero() {
        return HPoly::zero(q.nvars, q.degree.saturating_sub(p.degree));
    }
    let mut out = HPoly::zero(q.nvars, q.degree - p.degree);
    for (b, cb) in &p.coeffs {
        for (a, ca) in &q.coeffs {
            let Some(rest) = a.checked_sub(b) else { continue };
            let f = a
                .0
                .iter()
                .zip(&b.0)
                .fold(BigInt::one(), |acc, (&ai, &bi)| acc * falling(ai, bi));
            out.add_term(rest, cb * ca * Rat::from_integer(f));
        }
    }
    out
}

/// `⟨p, q⟩ = (p(D) q)(0)`.
pub fn pair(p: &HPoly, q: &HPoly) -> Rat {
    assert_eq!(p.nvars, q.nvars);
    if p.is_zero() || q.is_zero() || p.degree != q.degree {
        return Rat::zero();
    }
    p.coeffs.iter().fold(Rat::zero(), |acc, (m, c)| match q.coeffs.get(m) {
        Some(d) => acc + c * d * Rat::from_integer(m.factorial()),
        None => acc,
    })
}

/// A spanning set of the degree-`j` polynomials on the orthogonal
/// complement of the row span of `s_basis`: every degree-`j` monomial in
/// the linear forms of a null-space basis.
pub fn perp_space_gens(n: usize, s_basis: &Mat, j: usize) -> Vec<HPoly> {
    let u = if s_basis.rows() == 0 {
        Mat::identity(n)
    } else {
        s_basis.nullspace()
    };
    let forms: Vec<HPoly> = (0..u.rows())
        .map(|i| HPoly::linear_form(u.row(i)).expect("null-space rows are nonzero"))
        .collect();
    monomials(forms.len(), j)
        .into_iter()
        .map(|beta| {
            beta.exps()
                .iter()
                .zip(&forms)
                .fold(HPoly::one(n), |acc, (&e, f)| acc.mul(&f.pow(e as usize)))
        })
        .collect()
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{}", i + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", rat_to_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", rat_to_string(&mag), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn t(n: usize, i: usize) -> HPoly {
        HPoly::var(n, i)
    }

    #[test]
    fn linform_product_examples() {
        assert_eq!(linform_product(3, &[]).unwrap(), HPoly::one(3));
        let x4 = v(&[1, 1, 1]);
        let p = linform_product(3, &[&x4]).unwrap();
        assert_eq!(p.to_string(), "t1 + t2 + t3");
        let (x2, x3) = (v(&[0, 1, 0]), v(&[0, 0, 1]));
        let p = linform_product(3, &[&x2, &x3, &x4]).unwrap();
        let expected = t(3, 1).mul(&t(3, 2)).mul(&HPoly::linear_form(&x4).unwrap());
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "t1*t2*t3 + t2^2*t3 + t2*t3^2");
        assert_eq!(linform_product(2, &[&v(&[0, 0])]), Err(Error::ZeroVector));
    }

    #[test]
    fn diff_apply_examples() {
        let t1 = t(2, 0);
        assert_eq!(diff_apply(&t1, &t1.pow(2)), t1.scale(&rat(2)));
        let s = t(2, 0).add(&t(2, 1));
        assert_eq!(diff_apply(&s, &t(2, 0).mul(&t(2, 1))), s);
        assert!(diff_apply(&t1.pow(3), &t1).is_zero());
    }

    #[test]
    fn pair_examples() {
        let p = t(2, 0).pow(2).mul(&t(2, 1));
        assert_eq!(pair(&p, &p), rat(2));
        let x = v(&[2, -1, 3]);
        let y = v(&[1, 4, 1]);
        let px = HPoly::linear_form(&x).unwrap();
        let py = HPoly::linear_form(&y).unwrap();
        assert_eq!(pair(&px, &py), rat(2 - 4 + 3));
        assert_eq!(pair(&px, &HPoly::one(3)), rat(0));
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(1, 5), vec![MultiIndex::new(vec![5])]);
        assert_eq!(monomials(3, 3).len(), 10);
        assert_eq!(monomial_count(3, 3), 10);
        assert_eq!(monomial_count(4, 8), 165);
        let order: Vec<Vec<u32>> = monomials(3, 2).iter().map(|m| m.exps().to_vec()).collect();
        assert_eq!(
            order,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn perp_space_examples() {
        let s = Mat::from_i64(&[&[1, 0, 0]]);
        let gens = perp_space_gens(3, &s, 3);
        let basis = MonomialBasis::new(3, 3);
        let rows: Vec<Vec<Rat>> = gens.iter().map(|g| g.to_coeffs(&basis)).collect();
        assert_eq!(Mat::from_rows(basis.len(), rows).rank(), 4);
        for g in &gens {
            assert!(diff_apply(&t(3, 0), g).is_zero());
        }

        let full = Mat::identity(3);
        assert_eq!(perp_space_gens(3, &full, 0), vec![HPoly::one(3)]);
        assert!(perp_space_gens(3, &full, 2).is_empty());

        let zero = Mat::zeros(0, 3);
        let lin = perp_space_gens(3, &zero, 1);
        assert_eq!(lin.len(), 3);
    }

    #[test]
    fn rendering() {
        let p = t(2, 0)
            .pow(2)
            .scale(&ratio(-1, 2))
            .add(&t(2, 1).pow(2).scale(&rat(3)));
        assert_eq!(p.to_string(), "-1/2*t1^2 + 3*t2^2");
        assert_eq!(HPoly::zero(2, 1).to_string(), "0");
        assert_eq!(HPoly::one(2).scale(&rat(-4)).to_string(), "-4");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn hpoly(n: usize, d: usize) -> impl Strategy<Value = HPoly> {
            let monos = monomials(n, d);
            proptest::collection::vec(-3i64..=3, monos.len()).prop_map(move |cs| {
                HPoly::from_terms(n, d, monos.iter().cloned().zip(cs.into_iter().map(rat)))
            })
        }

        fn pair_of_polys() -> impl Strategy<Value = (HPoly, HPoly, HPoly)> {
            (1usize..=3, 0usize..=2, 0usize..=2, 0usize..=3)
                .prop_flat_map(|(n, a, b, c)| (hpoly(n, a), hpoly(n, b), hpoly(n, a + b + c)))
        }

        proptest! {
            #[test]
            fn pairing_symmetric((p, _, q) in pair_of_polys()) {
                let q = if q.degree() == p.degree() { q } else { p.clone() };
                prop_assert_eq!(pair(&p, &q), pair(&q, &p));
            }

            #[test]
            fn leibniz_consistency((p1, p2, q) in pair_of_polys()) {
                let lhs = diff_apply(&p1.mul(&p2), &q);
                let rhs = diff_apply(&p1, &diff_apply(&p2, &q));
                prop_assert!((lhs.is_zero() && rhs.is_zero()) || lhs == rhs);
            }

            #[test]
            fn pair_is_evaluation_at_origin((p, _, q) in pair_of_polys()) {
                let zero = vec![Rat::zero(); p.nvars()];
                let via_eval = if p.degree() <= q.degree() {
                    diff_apply(&p, &q).eval(&zero)
                } else {
                    Rat::zero()
                };
                prop_assert_eq!(pair(&p, &q), via_eval);
            }

            #[test]
            fn perp_gens_annihilated(n in 1usize..=3, j in 0usize..=3, rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 3), 0..3)) {
                let s = Mat::from_rows(n, rows.iter().map(|r| r[..n].iter().map(|&x| rat(x)).collect()).collect());
                for g in perp_space_gens(n, &s, j) {
                    for i in 0..s.rows() {
                        if s.row(i).iter().all(Zero::is_zero) { continue; }
                        let eta = HPoly::linear_form(s.row(i)).unwrap();
                        prop_assert!(diff_apply(&eta, &g).is_zero());
                    }
                }
            }
        }

        #[test]
        fn monomial_gram_is_diagonal_factorials() {
            for (n, d) in [(1, 3), (2, 3), (3, 2), (3, 4)] {
                let monos = monomials(n, d);
                for (i, a) in monos.iter().enumerate() {
                    for (j, b) in monos.iter().enumerate() {
                        let g = pair(
                            &HPoly::monomial(a.clone(), Rat::one()),
                            &HPoly::monomial(b.clone(), Rat::one()),
                        );
                        let expected = if i == j {
                            Rat::from_integer(a.factorial())
                        } else {
                            Rat::zero()
                        };
                        assert_eq!(g, expected);
                    }
                }
            }
        }
    }
}
