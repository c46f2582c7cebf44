//! Vector configurations and their matroid-level enumerations.
//!
//! Columns are ordered by index; that index order is the total order used
//! for valuations, activity and greedy extension. The one exception is
//! `I`-internal activity, which moves the elements of `I` to the end.
//! Repeated columns get distinct indices, so maxima over column sets are
//! always unique.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactla::{dot, primitive_integer, Mat, Rat};

/// A subset of column indices, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnSet(u64);

impl ColumnSet {
    pub const EMPTY: ColumnSet = ColumnSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ColumnSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 64);
        if n == 64 {
            ColumnSet(u64::MAX)
        } else {
            ColumnSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ColumnSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        ColumnSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        ColumnSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        ColumnSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        ColumnSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        ColumnSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn intersects(self, o: Self) -> bool {
        self.0 & o.0 != 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = ColumnSet> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full {
                None
            } else {
                Some(((s | !full).wrapping_add(1)) & full)
            };
            Some(ColumnSet(s))
        })
    }

    /// Relabel indices through `map` (`map[old] = new`).
    pub fn map(self, map: &[usize]) -> Self {
        self.iter().fold(ColumnSet::EMPTY, |s, i| s.with(map[i]))
    }
}

impl FromIterator<usize> for ColumnSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(ColumnSet::EMPTY, ColumnSet::with)
    }
}

impl fmt::Display for ColumnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for ColumnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ColumnSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A facet hyperplane of the configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Columns lying on the hyperplane.
    pub members: ColumnSet,
    /// Primitive integer normal, first nonzero entry positive.
    pub normal: Vec<Rat>,
    /// Number of columns off the hyperplane.
    pub mult: usize,
}

/// An ordered multiset of nonzero rational vectors spanning `Q^n`, with the
/// optional data attached to it by the extended constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    n: usize,
    columns: Vec<Vec<Rat>>,
    b0: Option<Vec<Vec<Rat>>>,
    lambda: Option<Vec<Rat>>,
    lambda_b0: Option<Vec<Rat>>,
}

fn rank_of(n: usize, vecs: &[&[Rat]]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    Mat::from_rows(n, vecs.iter().map(|v| v.to_vec()).collect()).rank()
}

impl Config {
    /// Validate and build a configuration from its column vectors.
    pub fn new(n: usize, columns: Vec<Vec<Rat>>) -> Result<Self> {
        if columns.len() > 60 {
            return Err(Error::Input(format!(
                "{} columns exceed the supported maximum of 60",
                columns.len()
            )));
        }
        for (i, c) in columns.iter().enumerate() {
            if c.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.len(),
                });
            }
            if c.iter().all(Zero::is_zero) {
                return Err(Error::ZeroColumn(i));
            }
        }
        let refs: Vec<&[Rat]> = columns.iter().map(Vec::as_slice).collect();
        let r = rank_of(n, &refs);
        if r != n {
            return Err(Error::RankDeficient {
                expected: n,
                found: r,
            });
        }
        Ok(Config {
            n,
            columns,
            b0: None,
            lambda: None,
            lambda_b0: None,
        })
    }

    /// Configuration whose columns are the columns of `m`.
    pub fn from_matrix(m: &Mat) -> Result<Self> {
        Config::new(m.rows(), m.transpose().row_vecs())
    }

    pub fn from_i64_columns(cols: &[&[i64]]) -> Result<Self> {
        let n = cols.first().map_or(0, |c| c.len());
        Config::new(
            n,
            cols.iter()
                .map(|c| c.iter().map(|&x| crate::exactla::rat(x)).collect())
                .collect(),
        )
    }

    pub fn with_b0(mut self, b0: Vec<Vec<Rat>>) -> Result<Self> {
        if b0.len() != self.n || b0.iter().any(|b| b.len() != self.n) {
            return Err(Error::BadB0(format!("expected {} vectors of length {}", self.n, self.n)));
        }
        let refs: Vec<&[Rat]> = b0.iter().map(Vec::as_slice).collect();
        let r = rank_of(self.n, &refs);
        if r != self.n {
            return Err(Error::BadB0(format!("rank {r} < {}", self.n)));
        }
        self.b0 = Some(b0);
        Ok(self)
    }

    /// Standard basis `e_1, ..., e_n` as `b0`.
    pub fn with_standard_b0(self) -> Self {
        let n = self.n;
        let b0 = Mat::identity(n).row_vecs();
        self.with_b0(b0).expect("identity is a basis")
    }

    pub fn with_lambda(mut self, lambda: Vec<Rat>) -> Result<Self> {
        if lambda.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: lambda.len(),
            });
        }
        self.lambda = Some(lambda);
        Ok(self)
    }

    pub fn with_lambda_b0(mut self, lambda: Vec<Rat>) -> Result<Self> {
        if lambda.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: lambda.len(),
            });
        }
        self.lambda_b0 = Some(lambda);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[Vec<Rat>] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &[Rat] {
        &self.columns[i]
    }

    pub fn b0(&self) -> Option<&[Vec<Rat>]> {
        self.b0.as_deref()
    }

    pub fn lambda(&self) -> Option<&[Rat]> {
        self.lambda.as_deref()
    }

    pub fn lambda_b0(&self) -> Option<&[Rat]> {
        self.lambda_b0.as_deref()
    }

    pub fn all(&self) -> ColumnSet {
        ColumnSet::full(self.len())
    }

    pub fn vectors(&self, s: ColumnSet) -> Vec<&[Rat]> {
        s.iter().map(|i| self.columns[i].as_slice()).collect()
    }

    pub fn rank(&self, s: ColumnSet) -> usize {
        rank_of(self.n, &self.vectors(s))
    }

    pub fn is_independent(&self, s: ColumnSet) -> bool {
        self.rank(s) == s.len()
    }

    pub fn is_basis(&self, s: ColumnSet) -> bool {
        s.len() == self.n && self.is_independent(s)
    }

    /// Canonical RREF basis of `span s`.
    pub fn span_basis(&self, s: ColumnSet) -> Mat {
        let rows: Vec<Vec<Rat>> = s.iter().map(|i| self.columns[i].clone()).collect();
        Mat::from_rows(self.n, rows).row_basis()
    }

    pub fn in_span(&self, s: ColumnSet, v: &[Rat]) -> bool {
        let mut vecs = self.vectors(s);
        let r = rank_of(self.n, &vecs);
        vecs.push(v);
        rank_of(self.n, &vecs) == r
    }

    /// `span a ⊆ span b`.
    pub fn span_le(&self, a: ColumnSet, b: ColumnSet) -> bool {
        self.rank(a.union(b)) == self.rank(b)
    }

    /// Columns of the whole configuration lying in `span s`.
    pub fn closure(&self, s: ColumnSet) -> ColumnSet {
        let r = self.rank(s);
        (0..self.len())
            .filter(|&x| s.contains(x) || self.rank(s.with(x)) == r)
            .collect()
    }

    /// Whether removing column `x` drops the rank.
    pub fn is_coloop(&self, x: usize) -> bool {
        self.rank(self.all().without(x)) < self.n
    }

    /// All independent column sets, in increasing bitmask order.
    pub fn independents(&self) -> Vec<ColumnSet> {
        let mut out = Vec::new();
        let mut independent = vec![false; 1usize << self.len()];
        for s in self.all().subsets() {
            let ok = match s.max() {
                None => true,
                Some(top) => {
                    let rest = s.without(top);
                    independent[rest.bits() as usize] && !self.in_span(rest, &self.columns[top])
                }
            };
            if ok {
                independent[s.bits() as usize] = true;
                out.push(s);
            }
        }
        out
    }

    pub fn bases(&self) -> Vec<ColumnSet> {
        self.independents()
            .into_iter()
            .filter(|s| s.len() == self.n)
            .collect()
    }

    /// `X(Y)`: columns outside `y` not spanned by the elements of `y`
    /// preceding them.
    pub fn passive_set(&self, y: ColumnSet) -> ColumnSet {
        (0..self.len())
            .filter(|&x| {
                if y.contains(x) {
                    return false;
                }
                let before = y.intersection(ColumnSet::full(x));
                !self.in_span(before, &self.columns[x])
            })
            .collect()
    }

    /// `val(Y) = #X(Y)`.
    pub fn val(&self, y: ColumnSet) -> usize {
        self.passive_set(y).len()
    }

    /// Facet hyperplanes, deduplicated and sorted by normal.
    pub fn facets(&self) -> Vec<Facet> {
        let mut seen: Vec<Facet> = Vec::new();
        for s in self.independents() {
            if s.len() + 1 != self.n {
                continue;
            }
            let rows: Vec<Vec<Rat>> = s.iter().map(|i| self.columns[i].clone()).collect();
            let ns = Mat::from_rows(self.n, rows).nullspace();
            debug_assert_eq!(ns.rows(), 1);
            let normal = primitive_integer(ns.row(0));
            if seen.iter().any(|f| f.normal == normal) {
                continue;
            }
            let members: ColumnSet = (0..self.len())
                .filter(|&x| dot(&normal, &self.columns[x]).is_zero())
                .collect();
            seen.push(Facet {
                members,
                mult: self.len() - members.len(),
                normal,
            });
        }
        seen.sort_by(|a, b| a.normal.cmp(&b.normal));
        seen
    }

    /// Column order with the elements of `i` moved last, each part kept in
    /// index order. Entry `k` is the column at position `k`.
    pub fn order_with_last(&self, i: ColumnSet) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).filter(|&x| !i.contains(x)).collect();
        order.extend(i.iter());
        order
    }

    /// `rank[x]` = position of column `x` in `order`.
    fn positions(order: &[usize]) -> Vec<usize> {
        let mut pos = vec![0; order.len()];
        for (k, &x) in order.iter().enumerate() {
            pos[x] = k;
        }
        pos
    }

    fn active_in(&self, basis: ColumnSet, b: usize, pos: &[usize]) -> bool {
        let rest = basis.without(b);
        let off = (0..self.len())
            .filter(|&x| !self.in_span(rest, &self.columns[x]))
            .max_by_key(|&x| pos[x]);
        off == Some(b)
    }

    fn internal_bases_masked(&self, mask: ColumnSet, order: &[usize]) -> Vec<ColumnSet> {
        let pos = Self::positions(order);
        self.bases()
            .into_iter()
            .filter(|&b| !b.intersection(mask).iter().any(|x| self.active_in(b, x, &pos)))
            .collect()
    }

    /// `I`-internal bases: bases with no element `b ∈ I` that is the
    /// maximum of the columns off `span(B \ b)`. The maximum is taken in
    /// the order that puts the elements of `I` last
    /// ([`Config::order_with_last`]).
    pub fn internal_bases(&self, i: ColumnSet) -> Result<Vec<ColumnSet>> {
        if !self.is_independent(i) {
            return Err(Error::NotIndependent(i));
        }
        Ok(self.internal_bases_masked(i, &self.order_with_last(i)))
    }

    /// Bases with no internally active element, in index order.
    pub fn internal_bases_all(&self) -> Vec<ColumnSet> {
        self.internal_bases_all_in(&(0..self.len()).collect::<Vec<_>>())
    }

    /// Bases with no internally active element under an explicit order.
    pub fn internal_bases_all_in(&self, order: &[usize]) -> Vec<ColumnSet> {
        self.internal_bases_masked(self.all(), order)
    }

    /// Close `seeds` under span inclusion, together with all bases.
    pub fn semiexternal_close(&self, seeds: &[ColumnSet]) -> Result<SemiExternalFamily> {
        for &s in seeds {
            if !self.is_independent(s) {
                return Err(Error::NotIndependent(s));
            }
        }
        let independents = self.independents();
        let mut members: BTreeSet<ColumnSet> = seeds.iter().copied().collect();
        members.extend(independents.iter().filter(|s| s.len() == self.n));
        loop {
            let before = members.len();
            let current: Vec<ColumnSet> = members.iter().copied().collect();
            for &cand in &independents {
                if members.contains(&cand) {
                    continue;
                }
                if current.iter().any(|&m| self.span_le(m, cand)) {
                    members.insert(cand);
                }
            }
            if members.len() == before {
                break;
            }
        }
        Ok(SemiExternalFamily { members })
    }

    /// Accept an explicitly listed family after checking independence and
    /// closure.
    pub fn semiexternal_family(&self, members: &[ColumnSet]) -> Result<SemiExternalFamily> {
        for &s in members {
            if !self.is_independent(s) {
                return Err(Error::NotIndependent(s));
            }
        }
        let fam = SemiExternalFamily {
            members: members.iter().copied().collect(),
        };
        if let Some((member, missing)) = self.closure_violation(&fam) {
            return Err(Error::FamilyNotClosed { member, missing });
        }
        Ok(fam)
    }

    /// First pair `(I, I'')` with `I` in the family, `span I ⊆ span I''`
    /// and `I''` missing.
    pub fn closure_violation(&self, fam: &SemiExternalFamily) -> Option<(ColumnSet, ColumnSet)> {
        let independents = self.independents();
        for &m in &fam.members {
            for &cand in &independents {
                if !fam.contains(cand) && self.span_le(m, cand) {
                    return Some((m, cand));
                }
            }
        }
        None
    }

    pub fn is_closed(&self, fam: &SemiExternalFamily) -> bool {
        !fam.is_empty() && self.closure_violation(fam).is_none()
    }

    /// The full family of independent sets.
    pub fn all_independents_family(&self) -> SemiExternalFamily {
        SemiExternalFamily {
            members: self.independents().into_iter().collect(),
        }
    }

    pub fn bases_family(&self) -> SemiExternalFamily {
        SemiExternalFamily {
            members: self.bases().into_iter().collect(),
        }
    }

    /// `M(I)`: independent sets spanning a facet hyperplane that contains `I`.
    pub fn facet_extensions(&self, i: ColumnSet) -> Vec<ColumnSet> {
        self.independents()
            .into_iter()
            .filter(|&j| j.len() + 1 == self.n && self.span_le(i, j))
            .collect()
    }

    /// Check that every non-basis independent `I` whose facet extensions all
    /// lie in the family is itself in the family. Returns the first
    /// violating `I`.
    pub fn thm28_condition(&self, fam: &SemiExternalFamily) -> (bool, Option<ColumnSet>) {
        for i in self.independents() {
            if i.len() == self.n || fam.contains(i) {
                continue;
            }
            if self.facet_extensions(i).iter().all(|&j| fam.contains(j)) {
                return (false, Some(i));
            }
        }
        (true, None)
    }

    /// `X' = X ⊔ B0`: the columns of `X` followed by those of `b0`; offsets
    /// are concatenated when both are present.
    pub fn extended(&self) -> Result<Config> {
        let b0 = self.b0.as_ref().ok_or(Error::MissingB0)?;
        let mut columns = self.columns.clone();
        columns.extend(b0.iter().cloned());
        let mut c = Config::new(self.n, columns)?;
        if let (Some(l), Some(lb)) = (&self.lambda, &self.lambda_b0) {
            let mut all = l.clone();
            all.extend(lb.iter().cloned());
            c = c.with_lambda(all)?;
        }
        Ok(c)
    }

    /// Greedy completion of `i` to a basis of `X'` using `b0` in its given
    /// order. `b0` occupies indices `N..N+n` of `X'`.
    pub fn extend_basis(&self, i: ColumnSet) -> Result<ColumnSet> {
        let b0 = self.b0.as_ref().ok_or(Error::MissingB0)?;
        if !self.is_independent(i) {
            return Err(Error::NotIndependent(i));
        }
        let mut vecs: Vec<Vec<Rat>> = i.iter().map(|x| self.columns[x].clone()).collect();
        let mut out = i;
        for (k, b) in b0.iter().enumerate() {
            let refs: Vec<&[Rat]> = vecs.iter().map(Vec::as_slice).collect();
            let r = rank_of(self.n, &refs);
            let mut with: Vec<&[Rat]> = refs.clone();
            with.push(b);
            if rank_of(self.n, &with) > r {
                out = out.with(self.len() + k);
            }
            vecs.push(b.clone());
        }
        Ok(out)
    }

    /// Sub-configuration on the columns of `s` (kept in index order). The
    /// attached data is dropped.
    pub fn restrict(&self, s: ColumnSet) -> Result<Config> {
        Config::new(
            self.n,
            s.iter().map(|i| self.columns[i].clone()).collect(),
        )
    }

    /// `X \ x`.
    pub fn delete(&self, x: usize) -> Result<Config> {
        self.restrict(self.all().without(x))
    }

    /// `X ⊔ Z`: columns of `self` followed by copies of the columns in `z`.
    pub fn augment(&self, z: ColumnSet) -> Result<Config> {
        let mut columns = self.columns.clone();
        columns.extend(z.iter().map(|i| self.columns[i].clone()));
        Config::new(self.n, columns)
    }

    /// Reorder columns: new column `k` is old column `perm[k]`. Offsets are
    /// permuted along; `b0` is kept.
    pub fn permuted(&self, perm: &[usize]) -> Config {
        assert_eq!(perm.len(), self.len());
        Config {
            n: self.n,
            columns: perm.iter().map(|&i| self.columns[i].clone()).collect(),
            b0: self.b0.clone(),
            lambda: self
                .lambda
                .as_ref()
                .map(|l| perm.iter().map(|&i| l[i].clone()).collect()),
            lambda_b0: self.lambda_b0.clone(),
        }
    }
}

/// A family of independent sets closed under span inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiExternalFamily {
    members: BTreeSet<ColumnSet>,
}

impl SemiExternalFamily {
    pub fn members(&self) -> impl Iterator<Item = ColumnSet> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<ColumnSet> {
        self.members.iter().copied().collect()
    }

    pub fn contains(&self, s: ColumnSet) -> bool {
        self.members.contains(&s)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members with no proper subset in the family.
    pub fn minimal(&self) -> Vec<ColumnSet> {
        self.members
            .iter()
            .copied()
            .filter(|&i| !self.members.iter().any(|&j| j != i && j.is_subset(i)))
            .collect()
    }

    /// Relabel every member through `map` (`map[old] = new`).
    pub fn relabel(&self, map: &[usize]) -> SemiExternalFamily {
        SemiExternalFamily {
            members: self.members.iter().map(|s| s.map(map)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    pub(crate) fn example25() -> Config {
        Config::from_i64_columns(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap()
    }

    fn cs(ix: &[usize]) -> ColumnSet {
        ix.iter().copied().collect()
    }

    /// Brute-force rank test over every subset.
    fn brute_independents(c: &Config) -> Vec<ColumnSet> {
        (0..1u64 << c.len())
            .map(ColumnSet::from_bits)
            .filter(|&s| {
                let rows: Vec<Vec<Rat>> = s.iter().map(|i| c.column(i).to_vec()).collect();
                rows.is_empty() || Mat::from_rows(c.n(), rows).rank() == s.len()
            })
            .collect()
    }

    #[test]
    fn validate_examples() {
        let c = example25();
        assert_eq!((c.n(), c.len()), (3, 4));
        assert_eq!(
            Config::from_i64_columns(&[&[1, 0], &[0, 0], &[0, 1]]),
            Err(Error::ZeroColumn(1))
        );
        assert_eq!(
            Config::from_i64_columns(&[&[1, 2], &[2, 4], &[3, 6]]),
            Err(Error::RankDeficient { expected: 2, found: 1 })
        );
        let bad = example25().with_b0(vec![vec![rat(1), rat(0), rat(0)]; 3]);
        assert!(matches!(bad, Err(Error::BadB0(_))));
    }

    #[test]
    fn enumeration_examples() {
        let c = example25();
        assert_eq!(c.independents().len(), 15);
        assert_eq!(c.bases().len(), 4);
        assert_eq!(c.independents(), brute_independents(&c));

        let id = Config::from_i64_columns(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(id.bases().len(), 1);
        assert_eq!(id.independents().len(), 8);

        let rep = Config::from_i64_columns(&[&[1, 0], &[1, 0], &[0, 1]]).unwrap();
        assert_eq!(rep.bases(), vec![cs(&[0, 2]), cs(&[1, 2])]);
        assert_eq!(rep.independents().len(), 6);
    }

    #[test]
    fn passive_set_examples() {
        let c = example25();
        assert_eq!(c.passive_set(ColumnSet::EMPTY), c.all());
        assert_eq!(c.val(ColumnSet::EMPTY), 4);
        assert_eq!(c.passive_set(cs(&[0, 1, 2])), ColumnSet::EMPTY);
        assert_eq!(c.passive_set(cs(&[1, 2, 3])), cs(&[0]));
        assert_eq!(c.val(cs(&[1, 2, 3])), 1);
    }

    #[test]
    fn facet_examples() {
        let c = example25();
        let f = c.facets();
        assert_eq!(f.len(), 6);
        assert!(f.iter().all(|f| f.mult == 2));
        let normals: Vec<Vec<Rat>> = f.iter().map(|f| f.normal.clone()).collect();
        let expected: Vec<Vec<Rat>> = [
            [0, 0, 1],
            [0, 1, -1],
            [0, 1, 0],
            [1, -1, 0],
            [1, 0, -1],
            [1, 0, 0],
        ]
        .iter()
        .map(|v| v.iter().map(|&x| rat(x)).collect())
        .collect();
        assert_eq!(normals, expected);

        let id = Config::from_i64_columns(&[&[1, 0], &[0, 1]]).unwrap();
        let f = id.facets();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|f| f.mult == 1));

        let rep = Config::from_i64_columns(&[&[1, 0], &[1, 0], &[0, 1]]).unwrap();
        let f = rep.facets();
        // normal (0,1) is the line span{e1}; normal (1,0) is span{e2}
        let on_e1 = f.iter().find(|f| f.normal == vec![rat(0), rat(1)]).unwrap();
        let on_e2 = f.iter().find(|f| f.normal == vec![rat(1), rat(0)]).unwrap();
        assert_eq!(on_e1.mult, 1);
        assert_eq!(on_e2.mult, 2);
    }

    #[test]
    fn internal_basis_examples() {
        let c = example25();
        // x4 precedes the elements of I, so {x1,x2,x4} is the internal basis
        assert_eq!(c.internal_bases(cs(&[0, 1, 2])).unwrap(), vec![cs(&[0, 1, 3])]);
        assert_eq!(c.internal_bases_all_in(&c.order_with_last(cs(&[0, 1, 2]))), vec![cs(&[0, 1, 3])]);
        assert_eq!(c.internal_bases(ColumnSet::EMPTY).unwrap(), c.bases());
        assert_eq!(c.internal_bases(cs(&[3])).unwrap(), vec![cs(&[0, 1, 2])]);
        assert_eq!(c.internal_bases_all(), vec![cs(&[0, 1, 2])]);
        let rep = Config::from_i64_columns(&[&[1, 0], &[1, 0], &[0, 1]]).unwrap();
        assert_eq!(
            rep.internal_bases(cs(&[0, 1])),
            Err(Error::NotIndependent(cs(&[0, 1])))
        );
    }

    #[test]
    fn semiexternal_examples() {
        let c = example25();
        let first = c
            .semiexternal_close(&[cs(&[0, 1]), cs(&[0, 2]), cs(&[0, 3])])
            .unwrap();
        assert_eq!(first.len(), 7);
        let all = c.semiexternal_close(&c.independents()).unwrap();
        assert_eq!(all.to_vec(), c.independents());
        let second = c.semiexternal_close(&[cs(&[0])]).unwrap();
        assert_eq!(second.len(), 8);
        let mut expected = vec![cs(&[0]), cs(&[0, 1]), cs(&[0, 2]), cs(&[0, 3])];
        expected.extend(c.bases());
        expected.sort();
        assert_eq!(second.to_vec(), expected);

        assert!(c.is_closed(&first));
        let broken = c.semiexternal_family(&[cs(&[0])]);
        assert!(matches!(broken, Err(Error::FamilyNotClosed { .. })));
    }

    #[test]
    fn thm28_condition_examples() {
        let c = example25();
        let first = c
            .semiexternal_close(&[cs(&[0, 1]), cs(&[0, 2]), cs(&[0, 3])])
            .unwrap();
        assert_eq!(c.thm28_condition(&first), (false, Some(cs(&[0]))));
        let second = c.semiexternal_close(&[cs(&[0])]).unwrap();
        assert_eq!(c.thm28_condition(&second), (true, None));
        assert_eq!(c.thm28_condition(&c.all_independents_family()), (true, None));
    }

    #[test]
    fn extend_basis_examples() {
        let c = example25().with_standard_b0();
        let b = cs(&[1, 2, 3]);
        assert_eq!(c.extend_basis(b).unwrap(), b);
        assert_eq!(c.extend_basis(ColumnSet::EMPTY).unwrap(), cs(&[4, 5, 6]));
        assert_eq!(c.extend_basis(cs(&[3])).unwrap(), cs(&[3, 4, 5]));
        assert_eq!(example25().extend_basis(b), Err(Error::MissingB0));
    }

    #[test]
    fn subsets_iteration() {
        let s = cs(&[1, 3]);
        let all: Vec<ColumnSet> = s.subsets().collect();
        assert_eq!(all, vec![cs(&[]), cs(&[1]), cs(&[3]), cs(&[1, 3])]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        pub(crate) fn small_config() -> impl Strategy<Value = Config> {
            (1usize..=3, 0usize..=3).prop_flat_map(|(n, extra)| {
                let cols = n + extra;
                proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), cols)
                    .prop_filter_map("needs full rank and nonzero columns", move |cols| {
                        let v: Vec<Vec<Rat>> = cols
                            .iter()
                            .map(|c| c.iter().map(|&x| rat(x)).collect())
                            .collect();
                        Config::new(n, v).ok()
                    })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn deletion_contraction_count(c in small_config(), pick in 0usize..64) {
                let x = pick % c.len();
                let with_x = c.independents().iter().filter(|s| s.contains(x)).count();
                let without: Vec<ColumnSet> = c
                    .independents()
                    .into_iter()
                    .filter(|s| !s.contains(x))
                    .collect();
                // independents of X \ x are exactly the independents avoiding x
                let brute = brute_independents(&c)
                    .into_iter()
                    .filter(|s| !s.contains(x))
                    .count();
                prop_assert_eq!(without.len(), brute);
                prop_assert_eq!(c.independents().len(), without.len() + with_x);
            }

            #[test]
            fn independents_extend_to_bases(c in small_config()) {
                let bases = c.bases();
                prop_assert!(bases.iter().all(|b| b.len() == c.n()));
                for i in c.independents() {
                    prop_assert!(bases.iter().any(|b| i.is_subset(*b)));
                }
            }

            #[test]
            fn internal_bases_sandwich(c in small_config()) {
                let bases = c.bases();
                for i in c.independents() {
                    let internal = c.internal_bases_all_in(&c.order_with_last(i));
                    let mid = c.internal_bases(i).unwrap();
                    prop_assert!(internal.iter().all(|b| mid.contains(b)));
                    prop_assert!(mid.iter().all(|b| bases.contains(b)));
                }
            }

            #[test]
            fn closure_idempotent_and_monotone(c in small_config(), a in any::<u64>(), b in any::<u64>()) {
                let ind = c.independents();
                let pick = |bits: u64| -> Vec<ColumnSet> {
                    ind.iter().enumerate().filter(|(k, _)| bits >> (k % 64) & 1 == 1).map(|(_, s)| *s).collect()
                };
                let sa = pick(a);
                let mut sab = sa.clone();
                sab.extend(pick(b));
                let fa = c.semiexternal_close(&sa).unwrap();
                let fab = c.semiexternal_close(&sab).unwrap();
                prop_assert!(c.is_closed(&fa));
                let again = c.semiexternal_close(&fa.to_vec()).unwrap();
                prop_assert_eq!(&again, &fa);
                prop_assert!(fa.members().all(|s| fab.contains(s)));
            }

            #[test]
            fn passive_disjoint(c in small_config(), bits in any::<u64>()) {
                let y = ColumnSet::from_bits(bits).intersection(c.all());
                prop_assert!(!c.passive_set(y).intersects(y));
            }
        }
    }
}
