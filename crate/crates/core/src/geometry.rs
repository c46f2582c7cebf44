//! Hyperplane arrangements, vertex sets, the least map and zonotope
//! lattice points.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::configuration::{ColumnSet, Config};
use crate::error::{Error, Result};
use crate::exactla::{determinant, dot, rat, solve_square, Mat, Rat};
use crate::gradedspaces::GradedSubspace;
use crate::polyring::{monomials, HPoly, MonomialBasis};

pub type Point = Vec<Rat>;

const MAX_TRIES: usize = 100;

/// The affine arrangement `{y : <x, y> = λ_x}` over the columns of a
/// configuration, with one vertex per basis.
#[derive(Clone, Debug)]
pub struct ArrangementInstance {
    pub config: Config,
    pub lambda: Vec<Rat>,
    /// Seed used when `lambda` was sampled.
    pub seed: Option<u64>,
    pub vertices: BTreeMap<ColumnSet, Point>,
    pub simple: bool,
}

/// First subcollection of at most `n + 1` hyperplanes that meets in the
/// wrong codimension, if any.
pub fn simplicity_witness(c: &Config, lambda: &[Rat]) -> Option<ColumnSet> {
    let n = c.n();
    c.all()
        .subsets()
        .filter(|s| !s.is_empty() && s.len() <= n + 1)
        .find(|&s| {
            let rows: Vec<Point> = s.iter().map(|i| c.column(i).to_vec()).collect();
            let a = Mat::from_rows(n, rows.clone());
            let r = a.rank();
            if r == s.len() {
                return false;
            }
            let aug: Vec<Point> = rows
                .into_iter()
                .zip(s.iter())
                .map(|(mut row, i)| {
                    row.push(lambda[i].clone());
                    row
                })
                .collect();
            // consistent but not of full codimension
            Mat::from_rows(n + 1, aug).rank() == r
        })
}

/// Deterministic offsets: entry `i` uniform in `[1, 1000·N·(i+1)]`.
pub fn sample_lambda(len: usize, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    (0..len)
        .map(|i| rat(rng.gen_range(1..=(1000 * len * (i + 1)) as i64)))
        .collect()
}

/// Build the arrangement for `c`. Given offsets are checked for
/// simplicity; otherwise offsets are sampled from `seed` (default 0).
pub fn make_arrangement(c: &Config, lambda: Option<&[Rat]>, seed: Option<u64>) -> Result<ArrangementInstance> {
    let (lambda, seed) = match lambda {
        Some(l) => {
            if l.len() != c.len() {
                return Err(Error::DimensionMismatch {
                    expected: c.len(),
                    found: l.len(),
                });
            }
            if let Some(w) = simplicity_witness(c, l) {
                return Err(Error::NotSimple(w));
            }
            (l.to_vec(), None)
        }
        None => {
            let seed = seed.unwrap_or(0);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let l = (0..MAX_TRIES)
                .map(|_| sample_lambda(c.len(), &mut rng))
                .find(|l| simplicity_witness(c, l).is_none())
                .ok_or(Error::SamplingExhausted(MAX_TRIES))?;
            (l, Some(seed))
        }
    };
    let mut vertices = BTreeMap::new();
    for b in c.bases() {
        let a = Mat::from_rows(c.n(), b.iter().map(|i| c.column(i).to_vec()).collect());
        let rhs: Vec<Rat> = b.iter().map(|i| lambda[i].clone()).collect();
        let v = solve_square(&a, &rhs)?.expect("basis matrices are invertible");
        vertices.insert(b, v);
    }
    Ok(ArrangementInstance {
        config: c.clone(),
        lambda,
        seed,
        vertices,
        simple: true,
    })
}

impl ArrangementInstance {
    /// Hyperplanes through `v`.
    pub fn incident(&self, v: &[Rat]) -> ColumnSet {
        (0..self.config.len())
            .filter(|&x| dot(self.config.column(x), v) == self.lambda[x])
            .collect()
    }
}

/// Vertices of the given bases, sorted and deduplicated.
pub fn vertex_set(a: &ArrangementInstance, family: &[ColumnSet]) -> Result<Vec<Point>> {
    let mut pts = family
        .iter()
        .map(|b| a.vertices.get(b).cloned().ok_or(Error::UnknownBasis(*b)))
        .collect::<Result<Vec<_>>>()?;
    pts.sort();
    pts.dedup();
    Ok(pts)
}

fn taylor_row(v: &[Rat], dmax: usize) -> Vec<Rat> {
    (0..=dmax)
        .flat_map(|d| monomials(v.len(), d))
        .map(|m| m.eval(v) / Rat::from_integer(m.factorial()))
        .collect()
}

/// `Π(V)`: the span of the least homogeneous parts of the exponentials
/// over `points`, in `nvars` variables.
///
/// The truncation degree grows until the Taylor rows are independent; by
/// then every pivot lies in the truncated range, so further degrees would
/// not change the result.
pub fn least_space(nvars: usize, points: &[Point]) -> Result<GradedSubspace> {
    for (i, p) in points.iter().enumerate() {
        if p.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: p.len(),
            });
        }
        if points[..i].contains(p) {
            return Err(Error::DuplicatePoints(i));
        }
    }
    if points.is_empty() {
        return Ok(GradedSubspace::zero(nvars));
    }
    let mut dmax = 0;
    loop {
        let offsets: Vec<usize> = (0..=dmax + 1)
            .scan(0, |acc, d| {
                let start = *acc;
                *acc += monomials(nvars, d).len();
                Some(start)
            })
            .collect();
        let m = Mat::from_rows(offsets[dmax + 1], points.iter().map(|p| taylor_row(p, dmax)).collect());
        let r = m.rref();
        if r.pivots.len() == points.len() {
            let mut least = Vec::new();
            for (row, &pc) in r.pivots.iter().enumerate() {
                let d = offsets.iter().rposition(|&o| o <= pc).expect("offset 0 exists");
                let basis = MonomialBasis::new(nvars, d);
                let block = &r.reduced.row(row)[offsets[d]..offsets[d + 1]];
                least.push(HPoly::from_coeffs(&basis, block));
            }
            return Ok(GradedSubspace::from_spanning(nvars, &least));
        }
        dmax += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub points: usize,
    pub rank: usize,
    pub invertible: bool,
}

/// Evaluate a basis of `s` on `points` and check the matrix is invertible.
pub fn restriction_certificate(points: &[Point], s: &GradedSubspace) -> Result<RestrictionReport> {
    let basis = s.basis_polys();
    if basis.len() != points.len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            found: basis.len(),
        });
    }
    let m = Mat::from_rows(
        basis.len(),
        points
            .iter()
            .map(|p| basis.iter().map(|f| f.eval(p)).collect())
            .collect(),
    );
    let rank = m.rank();
    Ok(RestrictionReport {
        points: points.len(),
        rank,
        invertible: rank == points.len(),
    })
}

/// Integer entries and every basis determinant `±1`.
pub fn is_unimodular(c: &Config) -> bool {
    let integral = c.columns().iter().flatten().all(|x| x.is_integer());
    integral
        && c.bases().into_iter().all(|b| {
            let a = Mat::from_rows(c.n(), b.iter().map(|i| c.column(i).to_vec()).collect());
            determinant(&a).abs().is_one()
        })
}

/// A nonnegative solution of `a z = b`, found by phase-1 simplex with
/// Bland's rule.
pub fn feasible_point(a: &Mat, b: &[Rat]) -> Option<Vec<Rat>> {
    let (m, k) = (a.rows(), a.cols());
    let width = k + m + 1;
    let mut t: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let flip = b[i].is_negative();
            let mut row: Vec<Rat> = (0..k)
                .map(|j| if flip { -a[(i, j)].clone() } else { a[(i, j)].clone() })
                .collect();
            row.extend((0..m).map(|j| if i == j { rat(1) } else { rat(0) }));
            row.push(b[i].abs());
            row
        })
        .collect();
    let mut obj: Vec<Rat> = (0..width)
        .map(|j| {
            if (k..k + m).contains(&j) {
                rat(0)
            } else {
                -t.iter().map(|r| r[j].clone()).sum::<Rat>()
            }
        })
        .collect();
    let mut basic: Vec<usize> = (k..k + m).collect();

    while let Some(pc) = (0..k + m).find(|&j| obj[j].is_negative()) {
        let pr = (0..m)
            .filter(|&i| t[i][pc].is_positive())
            .min_by(|&i, &j| {
                let ri = &t[i][width - 1] / &t[i][pc];
                let rj = &t[j][width - 1] / &t[j][pc];
                ri.cmp(&rj).then(basic[i].cmp(&basic[j]))
            })
            .expect("phase-1 objective is bounded below");
        let piv = t[pr][pc].clone();
        for x in t[pr].iter_mut() {
            *x = &*x / &piv;
        }
        let prow = t[pr].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pr && !row[pc].is_zero() {
                let f = row[pc].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        let f = obj[pc].clone();
        for (x, p) in obj.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
        basic[pr] = pc;
    }
    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut z = vec![rat(0); k];
    for (i, &j) in basic.iter().enumerate() {
        if j < k {
            z[j] = t[i][width - 1].clone();
        }
    }
    Some(z)
}

/// Weights `w ∈ [0,1]^N` with `X w = p`, if `p` lies in the zonotope.
pub fn zonotope_witness(c: &Config, p: &[Rat]) -> Option<Vec<Rat>> {
    let (n, nn) = (c.n(), c.len());
    // rows: X w = p, then w + s = 1
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut r: Vec<Rat> = (0..nn).map(|j| c.column(j)[i].clone()).collect();
            r.extend((0..nn).map(|_| rat(0)));
            r
        })
        .collect();
    rows.extend((0..nn).map(|i| {
        (0..2 * nn)
            .map(|j| if j == i || j == nn + i { rat(1) } else { rat(0) })
            .collect()
    }));
    let mut rhs = p.to_vec();
    rhs.extend((0..nn).map(|_| rat(1)));
    let z = feasible_point(&Mat::from_rows(2 * nn, rows), &rhs)?;
    let w = z[..nn].to_vec();
    let ok = w.iter().all(|x| !x.is_negative() && *x <= rat(1))
        && (0..n).all(|i| (0..nn).map(|j| &c.column(j)[i] * &w[j]).sum::<Rat>() == p[i]);
    assert!(ok, "simplex returned a non-witness");
    Some(w)
}

/// Lattice points of the zonotope when the configuration is unimodular,
/// sorted; `None` otherwise.
pub fn zonotope_lattice(c: &Config) -> (bool, Option<Vec<Point>>) {
    if !is_unimodular(c) {
        return (false, None);
    }
    let bounds: Vec<(i64, i64)> = (0..c.n())
        .map(|i| {
            let (mut lo, mut hi) = (rat(0), rat(0));
            for col in c.columns() {
                if col[i].is_negative() {
                    lo += &col[i];
                } else {
                    hi += &col[i];
                }
            }
            let to = |r: Rat| -> i64 { r.to_integer().try_into().expect("bounded coordinates") };
            (to(lo), to(hi))
        })
        .collect();
    let mut out = Vec::new();
    let mut cur: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    loop {
        let p: Point = cur.iter().map(|&x| rat(x)).collect();
        if zonotope_witness(c, &p).is_some() {
            out.push(p);
        }
        let mut k = 0;
        loop {
            if k == cur.len() {
                out.sort();
                return (true, Some(out));
            }
            if cur[k] < bounds[k].1 {
                cur[k] += 1;
                break;
            }
            cur[k] = bounds[k].0;
            k += 1;
        }
    }
}
