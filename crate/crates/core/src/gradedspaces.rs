//! Graded subspaces of the polynomial ring and graded ideals given by
//! homogeneous generators.
//!
//! A [`GradedSubspace`] stores one canonical RREF coefficient matrix per
//! degree, so two subspaces are equal exactly when their components are
//! byte-equal. An [`IdealGens`] is only ever queried degree by degree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{EchelonBasis, Mat, Rat};
use crate::polyring::{monomial_count, HPoly, MonomialBasis, MultiIndex};

/// Dimensions by degree, trailing zeros trimmed.
#[derive(Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HilbertFn {
    values: Vec<usize>,
}

impl HilbertFn {
    pub fn new(mut values: Vec<usize>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        HilbertFn { values }
    }

    /// Histogram of `degrees`.
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut values = Vec::new();
        for d in degrees {
            if values.len() <= d {
                values.resize(d + 1, 0);
            }
            values[d] += 1;
        }
        HilbertFn::new(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, d: usize) -> usize {
        self.values.get(d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }
}

impl fmt::Debug for HilbertFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

/// A homogeneous subspace of the polynomial ring.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    nvars: usize,
    comps: BTreeMap<usize, Mat>,
}

impl GradedSubspace {
    pub fn zero(nvars: usize) -> Self {
        GradedSubspace {
            nvars,
            comps: BTreeMap::new(),
        }
    }

    /// Normalize raw per-degree row matrices (any spanning rows).
    pub fn from_components(nvars: usize, raw: impl IntoIterator<Item = (usize, Mat)>) -> Self {
        let mut comps = BTreeMap::new();
        for (d, m) in raw {
            assert_eq!(m.cols(), monomial_count(nvars, d));
            let b = m.row_basis();
            if b.rows() > 0 {
                comps.insert(d, b);
            }
        }
        GradedSubspace { nvars, comps }
    }

    /// Graded span of homogeneous polynomials.
    pub fn from_spanning<'a>(nvars: usize, polys: impl IntoIterator<Item = &'a HPoly>) -> Self {
        let mut by_degree: BTreeMap<usize, Vec<&HPoly>> = BTreeMap::new();
        for p in polys {
            assert_eq!(p.nvars(), nvars);
            if !p.is_zero() {
                by_degree.entry(p.degree()).or_default().push(p);
            }
        }
        let raw = by_degree.into_iter().map(|(d, ps)| {
            let basis = MonomialBasis::new(nvars, d);
            let mut e = EchelonBasis::new(basis.len());
            for p in ps {
                e.insert(p.to_coeffs(&basis));
            }
            (d, e.into_mat())
        });
        GradedSubspace::from_components(nvars, raw)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn component(&self, d: usize) -> Option<&Mat> {
        self.comps.get(&d)
    }

    /// Canonical component at `d`, zero-row matrix when absent.
    pub fn component_or_zero(&self, d: usize) -> Mat {
        self.comps
            .get(&d)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(0, monomial_count(self.nvars, d)))
    }

    pub fn dim_at(&self, d: usize) -> usize {
        self.comps.get(&d).map_or(0, Mat::rows)
    }

    pub fn dim(&self) -> usize {
        self.comps.values().map(Mat::rows).sum()
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.comps.keys().next_back().copied()
    }

    pub fn hilbert(&self) -> HilbertFn {
        match self.top_degree() {
            None => HilbertFn::default(),
            Some(top) => HilbertFn::new((0..=top).map(|d| self.dim_at(d)).collect()),
        }
    }

    /// Canonical basis polynomials, by increasing degree.
    pub fn basis_polys(&self) -> Vec<HPoly> {
        let mut out = Vec::new();
        for (&d, m) in &self.comps {
            let basis = MonomialBasis::new(self.nvars, d);
            for i in 0..m.rows() {
                out.push(HPoly::from_coeffs(&basis, m.row(i)));
            }
        }
        out
    }

    pub fn contains_poly(&self, p: &HPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        let Some(m) = self.comps.get(&p.degree()) else {
            return false;
        };
        let basis = MonomialBasis::new(self.nvars, p.degree());
        EchelonBasis::from_mat(m).contains(&p.to_coeffs(&basis))
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> bool {
        self.comps.iter().all(|(&d, m)| match other.comps.get(&d) {
            None => false,
            Some(o) => {
                let e = EchelonBasis::from_mat(o);
                (0..m.rows()).all(|i| e.contains(m.row(i)))
            }
        })
    }

    pub fn sum(&self, other: &GradedSubspace) -> GradedSubspace {
        assert_eq!(self.nvars, other.nvars);
        let mut raw: BTreeMap<usize, Mat> = self.comps.clone();
        for (&d, m) in &other.comps {
            let merged = match raw.remove(&d) {
                Some(a) => a.vstack(m),
                None => m.clone(),
            };
            raw.insert(d, merged);
        }
        GradedSubspace::from_components(self.nvars, raw)
    }

    /// Degreewise intersection, as the complement of the sum of the
    /// complements in coefficient space.
    pub fn intersect(&self, other: &GradedSubspace) -> GradedSubspace {
        assert_eq!(self.nvars, other.nvars);
        let raw = self.comps.iter().filter_map(|(&d, a)| {
            let b = other.comps.get(&d)?;
            let both = a.nullspace().vstack(&b.nullspace());
            let meet = if both.rows() == 0 {
                Mat::identity(a.cols())
            } else {
                both.nullspace()
            };
            Some((d, meet))
        });
        GradedSubspace::from_components(self.nvars, raw)
    }
}

impl fmt::Debug for GradedSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedSubspace")
            .field("nvars", &self.nvars)
            .field("hilbert", &self.hilbert())
            .finish()
    }
}

/// Generators of a homogeneous ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGens {
    nvars: usize,
    gens: Vec<HPoly>,
}

impl IdealGens {
    /// Zero generators and repeats are dropped; order is otherwise kept.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = HPoly>) -> Self {
        let mut ideal = IdealGens {
            nvars,
            gens: Vec::new(),
        };
        ideal.extend(gens);
        ideal
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[HPoly] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn extend(&mut self, more: impl IntoIterator<Item = HPoly>) {
        for g in more {
            assert_eq!(g.nvars(), self.nvars);
            if !g.is_zero() && !self.gens.contains(&g) {
                self.gens.push(g);
            }
        }
    }

    /// Components `I_0, ..., I_dmax`, each in canonical RREF, built by
    /// `I_d = t_1 I_{d-1} + ... + t_n I_{d-1} + span(gens of degree d)`.
    pub fn components(&self, dmax: usize) -> Vec<Mat> {
        let mut out: Vec<Mat> = Vec::with_capacity(dmax + 1);
        let mut prev_basis: Option<MonomialBasis> = None;
        for d in 0..=dmax {
            let basis = MonomialBasis::new(self.nvars, d);
            let mut e = EchelonBasis::new(basis.len());
            for g in self.gens.iter().filter(|g| g.degree() == d) {
                if e.is_full() {
                    break;
                }
                e.insert(g.to_coeffs(&basis));
            }
            if let (Some(pb), Some(prev)) = (&prev_basis, out.last()) {
                'outer: for i in 0..prev.rows() {
                    let p = HPoly::from_coeffs(pb, prev.row(i));
                    for k in 0..self.nvars {
                        if e.is_full() {
                            break 'outer;
                        }
                        e.insert(p.shift(&MultiIndex::unit(self.nvars, k)).to_coeffs(&basis));
                    }
                }
            }
            out.push(e.into_mat());
            prev_basis = Some(basis);
        }
        out
    }

    /// RREF basis of the degree-`d` component of the ideal.
    pub fn component(&self, d: usize) -> Mat {
        self.components(d).pop().expect("components is non-empty")
    }

    /// `{q : g(D) q = 0 for every generator g}` up to degree `dmax`, one
    /// linear map per generator.
    pub fn kernel(&self, dmax: usize) -> GradedSubspace {
        let mut raw = Vec::new();
        for d in 0..=dmax {
            let k = self.kernel_component(d);
            if k.rows() == 0 {
                break;
            }
            raw.push((d, k));
        }
        GradedSubspace::from_components(self.nvars, raw)
    }

    /// Kernel component at degree `d` from the stacked differential maps.
    pub fn kernel_component(&self, d: usize) -> Mat {
        let source = MonomialBasis::new(self.nvars, d);
        let mut constraints = EchelonBasis::new(source.len());
        for g in self.gens.iter().filter(|g| g.degree() <= d) {
            if constraints.is_full() {
                break;
            }
            let target = MonomialBasis::new(self.nvars, d - g.degree());
            let mut rows = vec![vec![Rat::zero(); source.len()]; target.len()];
            for (col, alpha) in source.monos().iter().enumerate() {
                let image = crate::polyring::diff_apply(g, &HPoly::monomial(alpha.clone(), Rat::from_integer(1.into())));
                for (m, c) in image.terms() {
                    rows[target.position(m)][col] = c.clone();
                }
            }
            for r in rows {
                if constraints.is_full() {
                    break;
                }
                constraints.insert(r);
            }
        }
        if constraints.rank() == 0 {
            Mat::identity(source.len())
        } else {
            constraints.into_mat().nullspace()
        }
    }

    /// Kernel up to `dmax` as the pairing-orthogonal complement of the
    /// ideal components: `q ∈ ker` iff `⟨f, q⟩ = 0` for all `f ∈ I_d`.
    pub fn kernel_by_duality(&self, dmax: usize) -> GradedSubspace {
        let comps = self.components(dmax);
        let raw = comps.into_iter().enumerate().map(|(d, c)| {
            let basis = MonomialBasis::new(self.nvars, d);
            if c.rows() == 0 {
                return (d, Mat::identity(basis.len()));
            }
            let mut scaled = c.clone();
            for (j, m) in basis.monos().iter().enumerate() {
                let f = Rat::from_integer(m.factorial());
                for i in 0..scaled.rows() {
                    let v = &scaled[(i, j)] * &f;
                    scaled[(i, j)] = v;
                }
            }
            (d, scaled.nullspace())
        });
        GradedSubspace::from_components(self.nvars, raw)
    }

    /// Kernel computed until its first vanishing component.
    pub fn kernel_stable(&self, cap: usize) -> Result<GradedSubspace> {
        let mut raw = Vec::new();
        for d in 0..=cap {
            let k = self.kernel_component(d);
            if k.rows() == 0 {
                return Ok(GradedSubspace::from_components(self.nvars, raw));
            }
            raw.push((d, k));
        }
        Err(Error::NoStabilization(cap))
    }

    /// Hilbert function of `Π / I`, stopping at the first degree where the
    /// quotient vanishes.
    pub fn hilbert_quotient(&self, cap: usize) -> Result<HilbertFn> {
        let comps = self.components_until_full(cap)?;
        Ok(HilbertFn::new(
            comps
                .iter()
                .enumerate()
                .map(|(d, c)| monomial_count(self.nvars, d) - c.rows())
                .collect(),
        ))
    }

    /// Components up to and including the first one that fills its degree.
    pub fn components_until_full(&self, cap: usize) -> Result<Vec<Mat>> {
        // grow geometrically to avoid recomputing from scratch each degree
        let mut dmax = self.gens.iter().map(HPoly::degree).max().unwrap_or(0).min(cap);
        loop {
            let comps = self.components(dmax);
            if let Some(pos) = comps
                .iter()
                .enumerate()
                .position(|(d, c)| c.rows() == monomial_count(self.nvars, d))
            {
                return Ok(comps.into_iter().take(pos + 1).collect());
            }
            if dmax >= cap {
                return Err(Error::NoStabilization(cap));
            }
            dmax = (dmax * 2 + 1).min(cap);
        }
    }

    /// Degreewise equality of the generated ideals, checked up to the
    /// degree where both fill the ring.
    pub fn graded_equal(&self, other: &IdealGens, cap: usize) -> Result<bool> {
        let a = self.components_until_full(cap)?;
        let b = other.components_until_full(cap)?;
        let top = a.len().max(b.len()) - 1;
        let a = self.components(top);
        let b = other.components(top);
        Ok(a == b)
    }

    /// Degreewise containment `self ⊆ other` up to degree `dmax`.
    pub fn contained_in(&self, other: &IdealGens, dmax: usize) -> bool {
        let a = self.components(dmax);
        let b = other.components(dmax);
        a.iter().zip(&b).all(|(x, y)| {
            let e = EchelonBasis::from_mat(y);
            (0..x.rows()).all(|i| e.contains(x.row(i)))
        })
    }
}

/// Per-degree evidence for a direct-sum claim `P ⊕ J = Π`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub space_dim: usize,
    pub ideal_dim: usize,
    pub ambient_dim: usize,
    pub intersection_dim: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectSumReport {
    pub dmax: usize,
    pub degrees: Vec<DegreeCheck>,
    pub pass: bool,
}

/// Check `p_d ⊕ J_d = Π⁰_d` for every `d ≤ dmax` (default: top degree of
/// `p` plus one).
pub fn direct_sum_certificate(p: &GradedSubspace, j: &IdealGens, dmax: Option<usize>) -> DirectSumReport {
    let dmax = dmax.unwrap_or_else(|| p.top_degree().map_or(1, |t| t + 1));
    let ideal = j.components(dmax);
    let degrees: Vec<DegreeCheck> = ideal
        .iter()
        .enumerate()
        .map(|(d, jd)| {
            let pd = p.component_or_zero(d);
            let ambient = monomial_count(p.nvars(), d);
            let sum_rank = pd.vstack(jd).rank();
            let intersection_dim = pd.rows() + jd.rows() - sum_rank;
            DegreeCheck {
                degree: d,
                space_dim: pd.rows(),
                ideal_dim: jd.rows(),
                ambient_dim: ambient,
                intersection_dim,
                pass: intersection_dim == 0 && pd.rows() + jd.rows() == ambient,
            }
        })
        .collect();
    let pass = degrees.iter().all(|c| c.pass);
    DirectSumReport { dmax, degrees, pass }
}

/// Gram matrix `⟨a_i, b_j⟩` between two polynomial lists.
pub fn gram(a: &[HPoly], b: &[HPoly]) -> Mat {
    let rows = a
        .iter()
        .map(|p| b.iter().map(|q| crate::polyring::pair(p, q)).collect())
        .collect();
    Mat::from_rows(b.len(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::polyring::{linform_product, monomials};

    fn t(n: usize, i: usize) -> HPoly {
        HPoly::var(n, i)
    }

    fn lin(v: &[i64]) -> HPoly {
        HPoly::linear_form(&v.iter().map(|&x| rat(x)).collect::<Vec<_>>()).unwrap()
    }

    /// The six squared facet normals of the running 3x4 example.
    fn central_ideal_ex25() -> IdealGens {
        let normals: [[i64; 3]; 6] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, -1], [1, 0, -1], [1, -1, 0]];
        IdealGens::new(3, normals.iter().map(|n| lin(n).pow(2)))
    }

    /// Naive ideal component: every monomial multiple of every generator.
    fn naive_component(ideal: &IdealGens, d: usize) -> Mat {
        let basis = MonomialBasis::new(ideal.nvars(), d);
        let mut rows = Vec::new();
        for g in ideal.gens() {
            if g.degree() > d {
                continue;
            }
            for m in monomials(ideal.nvars(), d - g.degree()) {
                rows.push(g.shift(&m).to_coeffs(&basis));
            }
        }
        Mat::from_rows(basis.len(), rows).row_basis()
    }

    #[test]
    fn from_spanning_examples() {
        let polys = [HPoly::one(2), t(2, 0), t(2, 1)];
        let s = GradedSubspace::from_spanning(2, &polys);
        assert_eq!(s.dim_at(0), 1);
        assert_eq!(s.dim_at(1), 2);
        assert_eq!(s.hilbert().values(), &[1, 2]);

        let dup = [t(2, 0), t(2, 0), t(2, 0).scale(&rat(3)), t(2, 1)];
        assert_eq!(
            GradedSubspace::from_spanning(2, &dup),
            GradedSubspace::from_spanning(2, &[t(2, 0), t(2, 1)])
        );
    }

    #[test]
    fn first_family_span_from_listed_elements() {
        let x: Vec<Vec<i64>> = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]];
        let p = |ix: &[usize]| {
            let vs: Vec<Vec<Rat>> = ix.iter().map(|&i| x[i].iter().map(|&v| rat(v)).collect()).collect();
            let refs: Vec<&[Rat]> = vs.iter().map(Vec::as_slice).collect();
            linform_product(3, &refs).unwrap()
        };
        let listed = [p(&[]), p(&[0]), p(&[1]), p(&[2]), p(&[1, 2]), p(&[2, 3]), p(&[1, 3])];
        let s = GradedSubspace::from_spanning(3, &listed);
        assert_eq!(s.dim(), 7);
        assert_eq!(s.hilbert().values(), &[1, 3, 3]);
    }

    #[test]
    fn ideal_component_examples() {
        let i = IdealGens::new(2, [t(2, 0)]);
        let c = i.component(2);
        assert_eq!(c.rows(), 2);
        assert_eq!(c, naive_component(&i, 2));

        let central = central_ideal_ex25();
        for d in 0..5 {
            assert_eq!(central.component(d), naive_component(&central, d));
        }
        // Π⁰_2 has dimension 6; the six squares span a 6-dim space minus the
        // degree-2 kernel, which is zero here
        assert_eq!(central.component(2).rows(), 6);
        assert_eq!(central.component(1).rows(), 0);
    }

    #[test]
    fn kernel_examples() {
        let normals: [[i64; 3]; 6] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, -1], [1, 0, -1], [1, -1, 0]];
        let internal = IdealGens::new(3, normals.iter().map(|n| lin(n)));
        let k = internal.kernel(4);
        assert_eq!(k.hilbert().values(), &[1]);

        let one_var = IdealGens::new(1, [t(1, 0)]);
        assert_eq!(one_var.kernel(3).hilbert().values(), &[1]);

        let central = central_ideal_ex25();
        let k = central.kernel(5);
        assert_eq!(k.hilbert().values(), &[1, 3]);
        assert_eq!(k.dim(), 4);
        assert_eq!(k, central.kernel_by_duality(5));
        for q in k.basis_polys() {
            for g in central.gens() {
                assert!(crate::polyring::diff_apply(g, &q).is_zero());
            }
        }
    }

    #[test]
    fn hilbert_quotient_examples() {
        let normals: [[i64; 3]; 6] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, -1], [1, 0, -1], [1, -1, 0]];
        let external = IdealGens::new(3, normals.iter().map(|n| lin(n).pow(3)));
        let h = external.hilbert_quotient(16).unwrap();
        assert_eq!(h.values(), &[1, 3, 6, 4, 1]);
        assert_eq!(h.total(), 15);

        let linear = IdealGens::new(3, (0..3).map(|i| t(3, i)));
        assert_eq!(linear.hilbert_quotient(8).unwrap().values(), &[1]);

        let internal = IdealGens::new(3, normals.iter().map(|n| lin(n)));
        assert_eq!(internal.hilbert_quotient(8).unwrap().values(), &[1]);

        let not_zero_dim = IdealGens::new(2, [t(2, 0)]);
        assert_eq!(not_zero_dim.hilbert_quotient(6), Err(Error::NoStabilization(6)));
    }

    #[test]
    fn subspace_algebra_examples() {
        let a = GradedSubspace::from_spanning(3, &[t(3, 0), t(3, 1)]);
        let b = GradedSubspace::from_spanning(3, &[t(3, 1), t(3, 2)]);
        assert_eq!(a.intersect(&a), a);
        assert_eq!(a.sum(&GradedSubspace::zero(3)), a);
        assert_eq!(a.intersect(&b), GradedSubspace::from_spanning(3, &[t(3, 1)]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(a.intersect(&b).is_subspace_of(&a));
        assert!(!a.is_subspace_of(&b));
    }

    #[test]
    fn direct_sum_examples() {
        let all_vars = IdealGens::new(2, (0..2).map(|i| t(2, i)));
        let r = direct_sum_certificate(&GradedSubspace::zero(2), &all_vars, Some(2));
        assert!(!r.pass);
        assert!(!r.degrees[0].pass);

        let consts = GradedSubspace::from_spanning(2, &[HPoly::one(2)]);
        let r = direct_sum_certificate(&consts, &all_vars, None);
        assert!(r.pass);
        assert_eq!(r.dmax, 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn random_ideal() -> impl Strategy<Value = IdealGens> {
            (1usize..=3).prop_flat_map(|n| {
                proptest::collection::vec(
                    (proptest::collection::vec(-2i64..=2, n), 1usize..=3),
                    1..=4,
                )
                .prop_map(move |gs| {
                    IdealGens::new(
                        n,
                        gs.into_iter().filter(|(v, _)| v.iter().any(|&x| x != 0)).map(|(v, k)| lin(&v).pow(k)),
                    )
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn apolarity_duality(ideal in random_ideal()) {
                for d in 0..=4 {
                    let ker = ideal.kernel_component(d).rows();
                    let comp = ideal.component(d).rows();
                    prop_assert_eq!(ker, monomial_count(ideal.nvars(), d) - comp);
                }
                prop_assert_eq!(ideal.kernel(4), ideal.kernel_by_duality(4));
            }

            #[test]
            fn component_matches_naive(ideal in random_ideal(), d in 0usize..=4) {
                prop_assert_eq!(ideal.component(d), naive_component(&ideal, d));
            }

            #[test]
            fn equality_implies_intersection(ideal in random_ideal()) {
                let k = ideal.kernel(3);
                let again = ideal.kernel_by_duality(3);
                prop_assert_eq!(&k, &again);
                prop_assert_eq!(k.intersect(&again), k.clone());
                for q in k.basis_polys() {
                    for g in ideal.gens() {
                        prop_assert!(crate::polyring::diff_apply(g, &q).is_zero());
                    }
                }
            }
        }
    }
}
