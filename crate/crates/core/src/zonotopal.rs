//! Constructors for the zonotopal spaces and ideals.
//!
//! Each constructor returns a [`ZonotopalBundle`] holding the primal space
//! `P`, the ideal `I` whose kernel it should be, the ideal `J` whose kernel
//! is the dual space `D`, and the Hilbert function computed three ways:
//! from valuations, from the kernel of `I`, and from `P` itself. A
//! disagreement between the three is reported as an error.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::configuration::{ColumnSet, Config, SemiExternalFamily};
use crate::error::{Error, Result};
use crate::gradedspaces::{gram, GradedSubspace, HilbertFn, IdealGens};
use crate::hitting::minimal_hitting_sets;
use crate::polyring::{linform_product, perp_space_gens, HPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BundleKind {
    Central,
    External,
    SemiExternal,
    Internal,
    SemiInternal,
}

impl BundleKind {
    pub fn name(self) -> &'static str {
        match self {
            BundleKind::Central => "central",
            BundleKind::External => "external",
            BundleKind::SemiExternal => "semi_external",
            BundleKind::Internal => "internal",
            BundleKind::SemiInternal => "semi_internal",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ZonotopalBundle {
    pub kind: BundleKind,
    /// The column sets indexing the space: `𝔹(X)`, `𝕀'`, or `𝔹₋(X,I)`.
    pub index_family: Vec<ColumnSet>,
    /// `(I, Q_I)` pairs when the `Q` polynomials form a basis of `P`.
    pub q_basis: Option<Vec<(ColumnSet, HPoly)>>,
    pub p_space: GradedSubspace,
    pub i_ideal: IdealGens,
    /// Normal powers with the per-facet exponent bump (semi-external only).
    pub ie_ideal: Option<IdealGens>,
    pub j_ideal: IdealGens,
    /// The column sets `Y` with `p_Y` generating `J`. For the external
    /// kinds these index `X' = X ⊔ B0`.
    pub j_supports: Vec<ColumnSet>,
    /// `ker I`.
    pub kernel: GradedSubspace,
    pub hilbert_valuation: HilbertFn,
    pub hilbert_algebraic: HilbertFn,
    /// Column order used for valuations and activity.
    pub order: Vec<usize>,
    /// The independent set of the semi-internal kinds.
    pub i_set: Option<ColumnSet>,
}

impl ZonotopalBundle {
    pub fn dim(&self) -> usize {
        self.p_space.dim()
    }

    pub fn hilbert_space(&self) -> HilbertFn {
        self.p_space.hilbert()
    }

    /// `D = ker J`.
    pub fn d_space(&self, cap: usize) -> Result<GradedSubspace> {
        self.j_ideal.kernel_stable(cap)
    }

    /// Polynomials used as the primal basis in pairing checks: the `Q`
    /// basis when present, the canonical basis of `P` otherwise.
    pub fn primal_basis(&self) -> Vec<HPoly> {
        match &self.q_basis {
            Some(q) => q.iter().map(|(_, p)| p.clone()).collect(),
            None => self.p_space.basis_polys(),
        }
    }

    /// Rank of the Gram matrix between the primal basis and a basis of
    /// `D`; the pairing is an isomorphism iff this equals both dimensions.
    pub fn gram_rank(&self, cap: usize) -> Result<(usize, usize, usize)> {
        let d = self.d_space(cap)?.basis_polys();
        let p = self.primal_basis();
        let g = gram(&p, &d);
        Ok((p.len(), d.len(), g.rank()))
    }
}

/// Stabilization cap for kernels and quotients: `2(N + n) + 2`.
pub fn default_cap(c: &Config) -> usize {
    2 * (c.len() + c.n()) + 2
}

/// `p_Y`.
pub fn poly_of(c: &Config, y: ColumnSet) -> HPoly {
    linform_product(c.n(), &c.vectors(y)).expect("configuration columns are nonzero")
}

/// `{p_{η_F}^{m(F) + shift(F)}}` over the facet hyperplanes; exponents
/// below zero are impossible since `m(F) >= 1`.
fn normal_powers(c: &Config, shift: impl Fn(&crate::configuration::Facet) -> isize) -> Vec<HPoly> {
    c.facets()
        .iter()
        .map(|f| {
            let e = f.mult as isize + shift(f);
            HPoly::linear_form(&f.normal)
                .expect("normals are nonzero")
                .pow(e.max(0) as usize)
        })
        .collect()
}

/// `I(X)`: normal powers `p_{η_F}^{m(F)}`.
pub fn central_ideal(c: &Config) -> IdealGens {
    IdealGens::new(c.n(), normal_powers(c, |_| 0))
}

/// `I₊(X)`: normal powers `p_{η_F}^{m(F)+1}`.
pub fn external_ideal(c: &Config) -> IdealGens {
    IdealGens::new(c.n(), normal_powers(c, |_| 1))
}

/// `I₋(X)`: normal powers `p_{η_F}^{m(F)-1}`.
pub fn internal_ideal(c: &Config) -> IdealGens {
    IdealGens::new(c.n(), normal_powers(c, |_| -1))
}

/// `P(X)`, spanned by `Q_B = p_{X(B)}` over the bases.
pub fn central_space(c: &Config) -> GradedSubspace {
    let q: Vec<HPoly> = c.bases().into_iter().map(|b| poly_of(c, c.passive_set(b))).collect();
    GradedSubspace::from_spanning(c.n(), &q)
}

fn check_hilbert(what: &str, a: &HilbertFn, b: &HilbertFn) -> Result<()> {
    if a != b {
        return Err(Error::HilbertMismatch {
            what: what.to_string(),
            left: a.values().to_vec(),
            right: b.values().to_vec(),
        });
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    c: &Config,
    kind: BundleKind,
    index_family: Vec<ColumnSet>,
    q_basis: Option<Vec<(ColumnSet, HPoly)>>,
    p_space: GradedSubspace,
    i_ideal: IdealGens,
    ie_ideal: Option<IdealGens>,
    j_ideal: IdealGens,
    j_supports: Vec<ColumnSet>,
    hilbert_valuation: HilbertFn,
    order: Vec<usize>,
    i_set: Option<ColumnSet>,
) -> Result<ZonotopalBundle> {
    let kernel = i_ideal.kernel_stable(default_cap(c))?;
    let hilbert_algebraic = kernel.hilbert();
    check_hilbert(
        &format!("{} valuation vs kernel", kind.name()),
        &hilbert_valuation,
        &hilbert_algebraic,
    )?;
    check_hilbert(
        &format!("{} valuation vs space", kind.name()),
        &hilbert_valuation,
        &p_space.hilbert(),
    )?;
    Ok(ZonotopalBundle {
        kind,
        index_family,
        q_basis,
        p_space,
        i_ideal,
        ie_ideal,
        j_ideal,
        j_supports,
        kernel,
        hilbert_valuation,
        hilbert_algebraic,
        order,
        i_set,
    })
}

/// Central bundle: `P(X)`, `I(X)`, `J(X)`.
pub fn central(c: &Config) -> Result<ZonotopalBundle> {
    let bases = c.bases();
    let q: Vec<(ColumnSet, HPoly)> = bases
        .iter()
        .map(|&b| (b, poly_of(c, c.passive_set(b))))
        .collect();
    let p_space = GradedSubspace::from_spanning(c.n(), q.iter().map(|(_, p)| p));

    let n = c.n();
    let short: Vec<HPoly> = c
        .all()
        .subsets()
        .filter(|&y| c.rank(c.all().difference(y)) == n)
        .map(|y| poly_of(c, y))
        .collect();
    if GradedSubspace::from_spanning(n, &short) != p_space {
        return Err(Error::Inconsistent(
            "Q_B polynomials do not span the short polynomials".into(),
        ));
    }

    // every long set contains the complement of some facet hyperplane
    let j_supports: Vec<ColumnSet> = c
        .facets()
        .iter()
        .map(|f| c.all().difference(f.members))
        .collect();
    let j_ideal = IdealGens::new(n, j_supports.iter().map(|&y| poly_of(c, y)));
    let hv = HilbertFn::from_degrees(bases.iter().map(|&b| c.val(b)));
    assemble(
        c,
        BundleKind::Central,
        bases,
        Some(q),
        p_space,
        central_ideal(c),
        None,
        j_ideal,
        j_supports,
        hv,
        (0..c.len()).collect(),
        None,
    )
}

/// Full external bundle: the semi-external bundle of all independent sets.
pub fn external(c: &Config) -> Result<ZonotopalBundle> {
    let mut b = semi_external(c, &c.all_independents_family())?;
    b.kind = BundleKind::External;
    Ok(b)
}

/// Generators of `I₊(X, 𝕀')`: the external normal powers plus
/// `Π⁰_{#(X\S)}(S⟂)` for every span `S` of an independent set outside the
/// family.
pub fn semi_external_ideal(c: &Config, fam: &SemiExternalFamily) -> IdealGens {
    let mut ideal = external_ideal(c);
    let mut seen = BTreeSet::new();
    for i in c.independents() {
        if fam.contains(i) {
            continue;
        }
        let span = c.span_basis(i);
        if !seen.insert(format!("{span:?}")) {
            continue;
        }
        let off = c.len() - c.closure(i).len();
        ideal.extend(perp_space_gens(c.n(), &span, off));
    }
    ideal
}

/// `Iε(X, 𝕀')`: exponent `m(F) + 1` on facets spanned by a family member,
/// `m(F)` elsewhere.
pub fn epsilon_ideal(c: &Config, fam: &SemiExternalFamily) -> IdealGens {
    let spans: Vec<ColumnSet> = fam
        .members()
        .filter(|s| s.len() + 1 == c.n())
        .map(|s| c.closure(s))
        .collect();
    IdealGens::new(
        c.n(),
        normal_powers(c, |f| isize::from(spans.contains(&f.members))),
    )
}

/// Semi-external bundle for a closed family. Needs `b0` for `J₊`.
pub fn semi_external(c: &Config, fam: &SemiExternalFamily) -> Result<ZonotopalBundle> {
    if c.b0().is_none() {
        return Err(Error::MissingB0);
    }
    if let Some((member, missing)) = c.closure_violation(fam) {
        return Err(Error::FamilyNotClosed { member, missing });
    }
    let n = c.n();
    let members = fam.to_vec();
    let q: Vec<(ColumnSet, HPoly)> = members
        .iter()
        .map(|&i| (i, poly_of(c, c.passive_set(i))))
        .collect();
    let p_space = GradedSubspace::from_spanning(n, q.iter().map(|(_, p)| p));

    let short: Vec<HPoly> = c
        .all()
        .subsets()
        .filter(|&y| {
            let rest = c.all().difference(y);
            members.iter().any(|i| i.is_subset(rest))
        })
        .map(|y| poly_of(c, y))
        .collect();
    if GradedSubspace::from_spanning(n, &short) != p_space {
        return Err(Error::Inconsistent(
            "Q_I polynomials do not span the family-short polynomials".into(),
        ));
    }

    let extended = c.extended()?;
    let ex: Vec<ColumnSet> = members
        .iter()
        .map(|&i| c.extend_basis(i))
        .collect::<Result<_>>()?;
    let j_supports = minimal_hitting_sets(&ex);
    let j_ideal = IdealGens::new(n, j_supports.iter().map(|&y| poly_of(&extended, y)));
    let hv = HilbertFn::from_degrees(members.iter().map(|&i| c.val(i)));
    assemble(
        c,
        BundleKind::SemiExternal,
        members,
        Some(q),
        p_space,
        semi_external_ideal(c, fam),
        Some(epsilon_ideal(c, fam)),
        j_ideal,
        j_supports,
        hv,
        (0..c.len()).collect(),
        None,
    )
}

/// `I₋(X, I)`: `I(X)` plus `p_{η_F}^{m(F)-1}` for facets not containing `I`.
pub fn semi_internal_ideal(c: &Config, i: ColumnSet) -> IdealGens {
    let mut ideal = central_ideal(c);
    ideal.extend(
        c.facets()
            .iter()
            .filter(|f| !i.is_subset(f.members))
            .map(|f| HPoly::linear_form(&f.normal).expect("nonzero normal").pow(f.mult - 1)),
    );
    ideal
}

/// `P₋(X, I) = P(X) ∩ ⋂_{b ∈ I} P(X \ b)`.
pub fn semi_internal_space(c: &Config, i: ColumnSet) -> Result<GradedSubspace> {
    let mut space = central_space(c);
    for b in i.iter() {
        if c.is_coloop(b) {
            return Err(Error::ColoopInI(b));
        }
        space = space.intersect(&central_space(&c.delete(b)?));
    }
    Ok(space)
}

/// Semi-internal bundle for an independent set without coloops. The
/// valuations, the `I`-internal bases and `J₋(X, I)` use the column order
/// with the elements of `I` last.
pub fn semi_internal(c: &Config, i: ColumnSet) -> Result<ZonotopalBundle> {
    if !c.is_independent(i) {
        return Err(Error::NotIndependent(i));
    }
    if let Some(b) = i.iter().find(|&b| c.is_coloop(b)) {
        return Err(Error::ColoopInI(b));
    }
    let order = c.order_with_last(i);
    let reordered = c.permuted(&order);
    let mut pos = vec![0; c.len()];
    for (k, &x) in order.iter().enumerate() {
        pos[x] = k;
    }
    let i_new = i.map(&pos);
    let bminus_new = reordered.internal_bases(i_new)?;
    let hv = HilbertFn::from_degrees(bminus_new.iter().map(|&b| reordered.val(b)));
    let j_new = minimal_hitting_sets(&bminus_new);
    let j_ideal = IdealGens::new(c.n(), j_new.iter().map(|&y| poly_of(&reordered, y)));

    let mut bminus: Vec<ColumnSet> = bminus_new.iter().map(|s| s.map(&order)).collect();
    bminus.sort();
    let mut j_supports: Vec<ColumnSet> = j_new.iter().map(|s| s.map(&order)).collect();
    j_supports.sort();

    let kind = if i.len() == c.n() {
        BundleKind::Internal
    } else {
        BundleKind::SemiInternal
    };
    assemble(
        c,
        kind,
        bminus,
        None,
        semi_internal_space(c, i)?,
        semi_internal_ideal(c, i),
        None,
        j_ideal,
        j_supports,
        hv,
        order,
        Some(i),
    )
}

/// Internal bundle, realized as the semi-internal bundle of the last basis
/// in bitmask order.
pub fn internal(c: &Config) -> Result<ZonotopalBundle> {
    let b = *c.bases().last().expect("a full-rank configuration has a basis");
    semi_internal(c, b)
}

/// `P₋(X) = ⋂_{x ∈ X} P(X \ x)`; `None` when `X` has a coloop.
pub fn internal_space(c: &Config) -> Result<Option<GradedSubspace>> {
    if (0..c.len()).any(|x| c.is_coloop(x)) {
        return Ok(None);
    }
    let mut space = central_space(c);
    for x in 0..c.len() {
        space = space.intersect(&central_space(&c.delete(x)?));
    }
    Ok(Some(space))
}

/// `Σ_{I minimal in 𝕀'} ⋂_{Z ∈ Comp_I(X)} P(X ⊔ Z)`.
///
/// With `enforce`, the extra condition on the family is checked first and
/// a failure is returned as [`Error::ConditionFails`].
pub fn thm28_decomposition(c: &Config, fam: &SemiExternalFamily, enforce: bool) -> Result<GradedSubspace> {
    if enforce {
        if let (false, Some(w)) = c.thm28_condition(fam) {
            return Err(Error::ConditionFails(w));
        }
    }
    let bases = c.bases();
    let mut total = GradedSubspace::zero(c.n());
    for i in fam.minimal() {
        let mut meet: Option<GradedSubspace> = None;
        for &b in bases.iter().filter(|b| i.is_subset(**b)) {
            let z = b.difference(i);
            let p = central_space(&c.augment(z)?);
            meet = Some(match meet {
                None => p,
                Some(m) => m.intersect(&p),
            });
        }
        if let Some(m) = meet {
            total = total.sum(&m);
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Remark37Report {
    pub i: ColumnSet,
    /// `#I <= 2`: the equality is asserted rather than explored.
    pub assertion_mode: bool,
    pub applicable: bool,
    pub diagnostic: Option<String>,
    pub lhs_hilbert: Option<HilbertFn>,
    pub rhs_hilbert: Option<HilbertFn>,
    pub holds: Option<bool>,
    /// Assertion mode: the equality holds (or the check is inapplicable).
    /// Exploration mode: always true.
    pub pass: bool,
}

/// Compare `P₋(X, I)` with `P₋(X) + span{Q_B : B ∈ 𝔹₋(X,I) \ 𝔹₋(X)}`, both
/// activity notions taken in the order with `I` last.
pub fn remark37_check(c: &Config, i: ColumnSet) -> Result<Remark37Report> {
    let assertion_mode = i.len() <= 2;
    let skipped = |msg: &str| Remark37Report {
        i,
        assertion_mode,
        applicable: false,
        diagnostic: Some(msg.to_string()),
        lhs_hilbert: None,
        rhs_hilbert: None,
        holds: None,
        pass: true,
    };
    if !c.is_independent(i) {
        return Err(Error::NotIndependent(i));
    }
    if let Some(b) = i.iter().find(|&b| c.is_coloop(b)) {
        return Err(Error::ColoopInI(b));
    }
    let Some(pminus) = internal_space(c)? else {
        return Ok(skipped("configuration has a coloop, so the internal space is undefined"));
    };
    let lhs = semi_internal_space(c, i)?;
    let order = c.order_with_last(i);
    let reordered = c.permuted(&order);
    let mut pos = vec![0; c.len()];
    for (k, &x) in order.iter().enumerate() {
        pos[x] = k;
    }
    let i_new = i.map(&pos);
    let internal_all = reordered.internal_bases_all();
    let extra: Vec<HPoly> = reordered
        .internal_bases(i_new)?
        .into_iter()
        .filter(|b| !internal_all.contains(b))
        .map(|b| poly_of(&reordered, reordered.passive_set(b)))
        .collect();
    let rhs = pminus.sum(&GradedSubspace::from_spanning(c.n(), &extra));
    let holds = lhs == rhs;
    Ok(Remark37Report {
        i,
        assertion_mode,
        applicable: true,
        diagnostic: None,
        lhs_hilbert: Some(lhs.hilbert()),
        rhs_hilbert: Some(rhs.hilbert()),
        holds: Some(holds),
        pass: holds || !assertion_mode,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub claim: String,
    pub codim: usize,
    pub count: usize,
    pub pass: bool,
}

/// Codimensions of `I(X)`, `I₊(X)`, `I₋(X)` against `#𝔹(X)`, `#𝕀(X)`,
/// `#𝔹₋(X)`.
pub fn theorem1_counts(c: &Config) -> Result<Vec<CountCheck>> {
    let cap = default_cap(c);
    let rows = [
        ("codim I(X) = #B(X) (vertices)", central_ideal(c), c.bases().len()),
        ("codim I+(X) = #I(X) (regions)", external_ideal(c), c.independents().len()),
        (
            "codim I-(X) = #B-(X) (bounded regions)",
            internal_ideal(c),
            c.internal_bases_all().len(),
        ),
    ];
    rows.into_iter()
        .map(|(claim, ideal, count)| {
            let codim = ideal.hilbert_quotient(cap)?.total();
            Ok(CountCheck {
                claim: claim.to_string(),
                codim,
                count,
                pass: codim == count,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn cs(ix: &[usize]) -> ColumnSet {
        ix.iter().copied().collect()
    }

    fn ex25() -> Config {
        Config::from_i64_columns(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
            .unwrap()
            .with_standard_b0()
    }

    fn lin(v: &[i64]) -> HPoly {
        HPoly::linear_form(&v.iter().map(|&x| rat(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn central_examples() {
        let b = central(&ex25()).unwrap();
        assert_eq!(b.dim(), 4);
        assert_eq!(b.hilbert_valuation.values(), &[1, 3]);

        let id = Config::from_i64_columns(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(central(&id).unwrap().hilbert_valuation.values(), &[1]);

        let rep = Config::from_i64_columns(&[&[1, 0], &[1, 0], &[0, 1]]).unwrap();
        let b = central(&rep).unwrap();
        assert_eq!(b.index_family.len(), 2);
        assert_eq!(b.hilbert_valuation.values(), &[1, 1]);
        assert_eq!(rep.val(cs(&[0, 2])), 0);
        assert_eq!(rep.val(cs(&[1, 2])), 1);
    }

    #[test]
    fn semi_external_examples() {
        let c = ex25();
        let first = c.semiexternal_close(&[cs(&[0, 1]), cs(&[0, 2]), cs(&[0, 3])]).unwrap();
        let b = semi_external(&c, &first).unwrap();
        assert_eq!(b.dim(), 7);
        assert_eq!(b.hilbert_valuation.values(), &[1, 3, 3]);
        let listed = IdealGens::new(
            3,
            [
                lin(&[0, 0, 1]).pow(3),
                lin(&[0, 1, 0]).pow(3),
                lin(&[0, 1, -1]).pow(3),
                lin(&[1, 0, 0]).pow(2),
                lin(&[1, 0, -1]).pow(2),
                lin(&[1, -1, 0]).pow(2),
                lin(&[0, 0, 1]).pow(2).mul(&lin(&[0, 1, 0])),
            ],
        );
        assert!(b.i_ideal.graded_equal(&listed, 20).unwrap());

        let second = c.semiexternal_close(&[cs(&[0])]).unwrap();
        let b = semi_external(&c, &second).unwrap();
        assert_eq!(b.dim(), 8);
        assert_eq!(b.hilbert_valuation.values(), &[1, 3, 3, 1]);
        let pure = IdealGens::new(
            3,
            [
                lin(&[0, 0, 1]).pow(3),
                lin(&[0, 1, 0]).pow(3),
                lin(&[0, 1, -1]).pow(3),
                lin(&[1, 0, 0]).pow(2),
                lin(&[1, 0, -1]).pow(2),
                lin(&[1, -1, 0]).pow(2),
            ],
        );
        assert!(b.i_ideal.graded_equal(&pure, 20).unwrap());

        let e = external(&c).unwrap();
        assert_eq!(e.dim(), 15);
        assert_eq!(e.hilbert_valuation.values(), &[1, 3, 6, 4, 1]);

        let no_b0 = Config::from_i64_columns(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(
            semi_external(&no_b0, &no_b0.all_independents_family()),
            Err(Error::MissingB0)
        ));
    }

    #[test]
    fn semi_internal_examples() {
        let c = ex25();
        let b = semi_internal(&c, cs(&[0, 1, 2])).unwrap();
        assert_eq!(b.kind, BundleKind::Internal);
        assert_eq!(b.dim(), 1);
        assert_eq!(b.hilbert_valuation.values(), &[1]);

        let empty = semi_internal(&c, ColumnSet::EMPTY).unwrap();
        let cen = central(&c).unwrap();
        assert_eq!(empty.p_space, cen.p_space);
        assert_eq!(empty.index_family, cen.index_family);
        assert_eq!(empty.hilbert_valuation, cen.hilbert_valuation);

        let b = semi_internal(&c, cs(&[3])).unwrap();
        assert_eq!(b.index_family, vec![cs(&[0, 1, 2])]);
        assert_eq!(b.dim(), 1);
        assert_eq!(b.p_space, central_space(&c.delete(3).unwrap()));

        let rep = Config::from_i64_columns(&[&[1, 0], &[1, 0], &[0, 1]]).unwrap();
        assert_eq!(semi_internal(&rep, cs(&[2])).unwrap_err(), Error::ColoopInI(2));
        assert_eq!(
            semi_internal(&rep, cs(&[0, 1])).unwrap_err(),
            Error::NotIndependent(cs(&[0, 1]))
        );
    }

    #[test]
    fn decomposition_examples() {
        let c = ex25();
        let second = c.semiexternal_close(&[cs(&[0])]).unwrap();
        let d = thm28_decomposition(&c, &second, true).unwrap();
        assert_eq!(d.dim(), 8);
        assert_eq!(d, semi_external(&c, &second).unwrap().p_space);

        let bases = c.bases_family();
        assert_eq!(thm28_decomposition(&c, &bases, true).unwrap(), central_space(&c));

        let all = c.all_independents_family();
        let d = thm28_decomposition(&c, &all, true).unwrap();
        assert_eq!(d, external(&c).unwrap().p_space);

        let first = c.semiexternal_close(&[cs(&[0, 1]), cs(&[0, 2]), cs(&[0, 3])]).unwrap();
        assert_eq!(
            thm28_decomposition(&c, &first, true).unwrap_err(),
            Error::ConditionFails(cs(&[0]))
        );
    }

    #[test]
    fn remark37_examples() {
        let c = ex25();
        let r = remark37_check(&c, ColumnSet::EMPTY).unwrap();
        assert!(r.assertion_mode && r.applicable);
        assert_eq!(r.holds, Some(true));
        let r = remark37_check(&c, cs(&[3])).unwrap();
        assert_eq!(r.holds, Some(true));
        assert_eq!(r.lhs_hilbert.unwrap().total(), 1);
        let r = remark37_check(&c, cs(&[0, 1, 2])).unwrap();
        assert!(!r.assertion_mode);
        assert!(r.pass);
    }

    #[test]
    fn theorem1_examples() {
        let counts = |c: &Config| -> Vec<(usize, usize)> {
            theorem1_counts(c).unwrap().iter().map(|r| (r.codim, r.count)).collect()
        };
        assert_eq!(counts(&ex25()), vec![(4, 4), (15, 15), (1, 1)]);
        let id = Config::from_i64_columns(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(counts(&id), vec![(1, 1), (4, 4), (0, 0)]);
        let tri = Config::from_i64_columns(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(counts(&tri), vec![(3, 3), (7, 7), (1, 1)]);
    }
}
