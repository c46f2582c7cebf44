//! Input documents and the JSON reports produced for each command.
//!
//! Reports are `serde_json::Value` trees with sorted keys, so the same
//! document and options always render to the same bytes.

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::configuration::{ColumnSet, Config, SemiExternalFamily};
use crate::error::{Error, Result};
use crate::exactla::{parse_rat, rat_to_string, Rat};
use crate::geometry::{
    least_space, make_arrangement, restriction_certificate, vertex_set, zonotope_lattice, Point,
};
use crate::gradedspaces::{direct_sum_certificate, GradedSubspace};
use crate::polyring::HPoly;
use crate::zonotopal::{
    central, default_cap, external, internal_ideal, internal_space, remark37_check,
    semi_external, semi_internal, semi_internal_ideal, theorem1_counts, thm28_decomposition,
    BundleKind, ZonotopalBundle,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIPrime {
    sets: Vec<Vec<usize>>,
    #[serde(default)]
    closed: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    name: Option<String>,
    matrix: Vec<Vec<Value>>,
    #[serde(default)]
    b0: Option<Vec<Vec<Value>>>,
    #[serde(default)]
    lambda: Option<Vec<Value>>,
    #[serde(default)]
    lambda_b0: Option<Vec<Value>>,
    #[serde(default)]
    iprime: Option<RawIPrime>,
    #[serde(default)]
    i: Option<Vec<usize>>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    points: Option<Vec<Vec<Value>>>,
}

/// How the document specified `𝕀'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IPrimeSpec {
    pub sets: Vec<ColumnSet>,
    /// `true`: `sets` is the whole family; `false`: seeds to be closed.
    pub closed: bool,
}

/// A parsed and validated input document.
#[derive(Clone, Debug)]
pub struct ConfigDocument {
    pub name: Option<String>,
    pub config: Config,
    pub iprime: Option<IPrimeSpec>,
    pub i: Option<ColumnSet>,
    pub seed: Option<u64>,
    pub points: Option<Vec<Point>>,
}

fn parse_value(v: &Value, field: &str) -> Result<Rat> {
    let bad = |what: &str| Error::Input(format!("{field}: {what}"));
    match v {
        Value::Number(num) => match num.as_i64() {
            Some(k) => Ok(Rat::from_integer(k.into())),
            None => Err(bad("non-integer number; write rationals as \"p/q\" strings")),
        },
        Value::String(s) => parse_rat(s).ok_or_else(|| bad(&format!("malformed rational {s:?}"))),
        _ => Err(bad("expected an integer or a \"p/q\" string")),
    }
}

fn parse_vector(vs: &[Value], field: &str) -> Result<Vec<Rat>> {
    vs.iter()
        .enumerate()
        .map(|(k, v)| parse_value(v, &format!("{field}[{k}]")))
        .collect()
}

/// Rows of a matrix, returned as its columns.
fn parse_columns(rows: &[Vec<Value>], field: &str) -> Result<Vec<Vec<Rat>>> {
    let parsed: Vec<Vec<Rat>> = rows
        .iter()
        .enumerate()
        .map(|(r, row)| parse_vector(row, &format!("{field}[{r}]")))
        .collect::<Result<_>>()?;
    let width = parsed.first().map_or(0, Vec::len);
    if let Some(r) = parsed.iter().position(|row| row.len() != width) {
        return Err(Error::Input(format!(
            "{field}[{r}]: row has {} entries, expected {width}",
            parsed[r].len()
        )));
    }
    Ok((0..width)
        .map(|j| parsed.iter().map(|row| row[j].clone()).collect())
        .collect())
}

fn parse_set(ix: &[usize], len: usize, field: &str) -> Result<ColumnSet> {
    if let Some(&bad) = ix.iter().find(|&&k| k >= len) {
        return Err(Error::Input(format!(
            "{field}: column index {bad} out of range (configuration has {len} columns)"
        )));
    }
    Ok(ix.iter().copied().collect())
}

impl ConfigDocument {
    pub fn parse(text: &str) -> Result<ConfigDocument> {
        let raw: RawDocument =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("document: {e}")))?;
        if raw.matrix.is_empty() {
            return Err(Error::Input("matrix: needs at least one row".into()));
        }
        let n = raw.matrix.len();
        let columns = parse_columns(&raw.matrix, "matrix")?;
        let mut config = Config::new(n, columns)?;
        if let Some(b0) = &raw.b0 {
            config = config.with_b0(parse_columns(b0, "b0")?)?;
        }
        if let Some(l) = &raw.lambda {
            config = config.with_lambda(parse_vector(l, "lambda")?)?;
        }
        if let Some(l) = &raw.lambda_b0 {
            config = config.with_lambda_b0(parse_vector(l, "lambda_b0")?)?;
        }
        let len = config.len();
        let iprime = raw
            .iprime
            .map(|ip| {
                let sets = ip
                    .sets
                    .iter()
                    .enumerate()
                    .map(|(k, s)| parse_set(s, len, &format!("iprime.sets[{k}]")))
                    .collect::<Result<Vec<_>>>()?;
                Ok::<_, Error>(IPrimeSpec {
                    sets,
                    closed: ip.closed,
                })
            })
            .transpose()?;
        let i = raw.i.as_deref().map(|s| parse_set(s, len, "i")).transpose()?;
        let points = raw
            .points
            .as_ref()
            .map(|pts| {
                pts.iter()
                    .enumerate()
                    .map(|(k, p)| {
                        let v = parse_vector(p, &format!("points[{k}]"))?;
                        if v.len() != n {
                            return Err(Error::Input(format!(
                                "points[{k}]: expected {n} coordinates, found {}",
                                v.len()
                            )));
                        }
                        Ok(v)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Ok(ConfigDocument {
            name: raw.name,
            config,
            iprime,
            i,
            seed: raw.seed,
            points,
        })
    }

    pub fn family(&self) -> Result<SemiExternalFamily> {
        let given = self
            .iprime
            .as_ref()
            .ok_or_else(|| Error::Input("this command needs \"iprime\" in the document".into()))?;
        if given.closed {
            self.config.semiexternal_family(&given.sets)
        } else {
            self.config.semiexternal_close(&given.sets)
        }
    }

    pub fn i_set(&self) -> Result<ColumnSet> {
        self.i
            .ok_or_else(|| Error::Input("this command needs \"i\" in the document".into()))
    }

    fn echo(&self) -> Value {
        let c = &self.config;
        let vecs = |vs: &[Vec<Rat>]| -> Value { vs.iter().map(|v| rats(v)).collect() };
        json!({
            "name": self.name,
            "n": c.n(),
            "columns": vecs(c.columns()),
            "b0": c.b0().map(vecs),
            "lambda": c.lambda().map(rats),
            "lambda_b0": c.lambda_b0().map(rats),
            "iprime": self.iprime.as_ref().map(|s| json!({"sets": s.sets, "closed": s.closed})),
            "i": self.i,
            "seed": self.seed,
            "points": self.points.as_ref().map(|p| vecs(p)),
        })
    }
}

fn rats(v: &[Rat]) -> Value {
    v.iter().map(|x| Value::String(rat_to_string(x))).collect()
}

fn polys(ps: &[HPoly]) -> Value {
    ps.iter().map(|p| Value::String(p.to_string())).collect()
}

fn subspace(s: &GradedSubspace) -> Value {
    json!({
        "dim": s.dim(),
        "hilbert": s.hilbert(),
        "basis": polys(&s.basis_polys()),
    })
}

/// Per-degree dimensions of two graded spaces and whether they coincide.
fn graded_equality(a: &GradedSubspace, b: &GradedSubspace) -> (bool, Value) {
    let top = a.top_degree().max(b.top_degree()).unwrap_or(0);
    let rows: Vec<Value> = (0..=top)
        .map(|d| {
            let eq = a.component_or_zero(d) == b.component_or_zero(d);
            json!({"degree": d, "left_dim": a.dim_at(d), "right_dim": b.dim_at(d), "equal": eq})
        })
        .collect();
    (a == b, Value::Array(rows))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Th1,
    Exzono,
    Pi,
    Plus,
    Basis,
    Explus,
    T26,
    T28,
    T33,
    T34,
    R37,
}

impl Theorem {
    pub const ALL: [(&'static str, Theorem); 11] = [
        ("th1", Theorem::Th1),
        ("exzono", Theorem::Exzono),
        ("pi", Theorem::Pi),
        ("plus", Theorem::Plus),
        ("basis", Theorem::Basis),
        ("explus", Theorem::Explus),
        ("t26", Theorem::T26),
        ("t28", Theorem::T28),
        ("t33", Theorem::T33),
        ("t34", Theorem::T34),
        ("r37", Theorem::R37),
    ];

    pub fn parse(s: &str) -> Option<Theorem> {
        Theorem::ALL.iter().find(|(k, _)| *k == s).map(|(_, t)| *t)
    }

    pub fn name(self) -> &'static str {
        Theorem::ALL.iter().find(|(_, t)| *t == self).map(|(k, _)| *k).unwrap()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Overrides the document seed.
    pub seed: Option<u64>,
    /// Overrides the top degree of direct-sum certificates.
    pub dmax: Option<usize>,
}

/// A finished report and whether every certificate in it passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub pass: bool,
}

impl Outcome {
    /// Process exit status: 0 pass, 1 certificate failure.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

/// Exit status for an error: 1 for failed internal certificates, 2 for
/// everything caused by the input.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::HilbertMismatch { .. } | Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

fn envelope(command: &str, doc: Option<&ConfigDocument>, body: Map<String, Value>, pass: bool) -> Outcome {
    let mut top = Map::new();
    top.insert("version".into(), json!(VERSION));
    top.insert("command".into(), json!(command));
    if let Some(d) = doc {
        top.insert("input".into(), d.echo());
    }
    top.insert("pass".into(), json!(pass));
    top.extend(body);
    Outcome {
        report: Value::Object(top),
        pass,
    }
}

/// Error report, for the CLI to emit alongside a nonzero exit status.
pub fn error_report(command: &str, e: &Error) -> Value {
    json!({
        "version": VERSION,
        "command": command,
        "pass": false,
        "error": e.to_string(),
    })
}

pub fn cmd_matroid(doc: &ConfigDocument) -> Result<Outcome> {
    let c = &doc.config;
    let bases = c.bases();
    let independents = c.independents();
    let hist = |sets: &[ColumnSet]| crate::gradedspaces::HilbertFn::from_degrees(sets.iter().map(|&s| c.val(s)));
    let facets: Vec<Value> = c
        .facets()
        .iter()
        .map(|f| json!({"members": f.members, "normal": rats(&f.normal), "multiplicity": f.mult}))
        .collect();
    let mut body = Map::new();
    body.insert("bases".into(), json!(bases));
    body.insert("independents".into(), json!(independents));
    body.insert("facets".into(), Value::Array(facets));
    body.insert(
        "valuations".into(),
        json!({"bases": hist(&bases), "independents": hist(&independents)}),
    );
    body.insert("internal_bases".into(), json!(c.internal_bases_all()));
    body.insert(
        "counts".into(),
        json!({
            "bases": bases.len(),
            "independents": independents.len(),
            "internal_bases": c.internal_bases_all().len(),
        }),
    );
    if let Some(i) = doc.i {
        body.insert(
            "i_internal".into(),
            json!({
                "i": i,
                "order": c.order_with_last(i),
                "bases": c.internal_bases(i)?,
            }),
        );
    }
    if doc.iprime.is_some() {
        body.insert("iprime_family".into(), json!(doc.family()?.to_vec()));
    }
    Ok(envelope("matroid", Some(doc), body, true))
}

/// The configuration itself when it carries `b0`, otherwise with the
/// standard basis attached; for checks that only involve `P`-spaces.
fn with_some_b0(c: &Config) -> Config {
    if c.b0().is_some() {
        c.clone()
    } else {
        c.clone().with_standard_b0()
    }
}

pub fn build_bundle(doc: &ConfigDocument, kind: BundleKind) -> Result<ZonotopalBundle> {
    let c = &doc.config;
    match kind {
        BundleKind::Central => central(c),
        BundleKind::External => external(c),
        BundleKind::SemiExternal => semi_external(c, &doc.family()?),
        BundleKind::SemiInternal => semi_internal(c, doc.i_set()?),
        BundleKind::Internal => crate::zonotopal::internal(c),
    }
}

pub fn bundle_json(b: &ZonotopalBundle) -> Value {
    let q = b.q_basis.as_ref().map(|q| {
        q.iter()
            .map(|(s, p)| json!({"set": s, "poly": p.to_string()}))
            .collect::<Vec<_>>()
    });
    json!({
        "kind": b.kind,
        "dim": b.dim(),
        "index_family": b.index_family,
        "hilbert": {
            "valuation": b.hilbert_valuation,
            "kernel": b.hilbert_algebraic,
            "space": b.hilbert_space(),
        },
        "q_basis": q,
        "p_space": subspace(&b.p_space),
        "i_ideal": polys(b.i_ideal.gens()),
        "ie_ideal": b.ie_ideal.as_ref().map(|g| polys(g.gens())),
        "j_ideal": {
            "supports": b.j_supports,
            "generators": polys(b.j_ideal.gens()),
        },
        "order": b.order,
        "i": b.i_set,
    })
}

pub fn cmd_space(doc: &ConfigDocument, kind: BundleKind) -> Result<Outcome> {
    let b = build_bundle(doc, kind)?;
    let mut body = Map::new();
    body.insert("space".into(), bundle_json(&b));
    Ok(envelope("space", Some(doc), body, true))
}

struct Claims(Vec<Value>);

impl Claims {
    fn push(&mut self, name: &str, pass: bool, evidence: Value) {
        self.0.push(json!({"claim": name, "pass": pass, "evidence": evidence}));
    }

    fn all_pass(&self) -> bool {
        self.0.iter().all(|c| c["pass"] == json!(true))
    }
}

fn seeds(doc: &ConfigDocument, opts: &RunOptions) -> (u64, u64) {
    let s = opts.seed.or(doc.seed).unwrap_or(0);
    (s, s.wrapping_add(1))
}

/// `Π(V) = D` for the vertex sets of two arrangements: the one given by
/// the document offsets (or the first seed) and a freshly sampled one.
fn least_map_claims(
    claims: &mut Claims,
    name: &str,
    arr_config: &Config,
    family: &[ColumnSet],
    d: &GradedSubspace,
    doc: &ConfigDocument,
    opts: &RunOptions,
) -> Result<()> {
    let (s1, s2) = seeds(doc, opts);
    for (label, lambda, seed) in [
        ("document offsets", arr_config.lambda(), s1),
        ("second seed", None, s2),
    ] {
        let arr = make_arrangement(arr_config, lambda, Some(seed))?;
        let pts = vertex_set(&arr, family)?;
        let pi = least_space(arr_config.n(), &pts)?;
        let (eq, table) = graded_equality(&pi, d);
        claims.push(
            &format!("{name} [{label}]"),
            eq && pts.len() == family.len(),
            json!({
                "lambda": rats(&arr.lambda),
                "seed": arr.seed,
                "points": pts.len(),
                "degrees": table,
            }),
        );
    }
    Ok(())
}

fn bundle_claims(
    claims: &mut Claims,
    b: &ZonotopalBundle,
    prefix: &str,
    opts: &RunOptions,
) -> Result<GradedSubspace> {
    let cap = 2 * (b.order.len() + b.p_space.nvars()) + 2;
    let (eq, table) = graded_equality(&b.p_space, &b.kernel);
    claims.push(&format!("{prefix}: P = ker I"), eq, json!({"degrees": table}));
    claims.push(
        &format!("{prefix}: Hilbert function from valuations"),
        b.hilbert_valuation == b.hilbert_algebraic && b.hilbert_valuation == b.hilbert_space(),
        json!({
            "valuation": b.hilbert_valuation,
            "kernel": b.hilbert_algebraic,
            "space": b.hilbert_space(),
        }),
    );
    let ds = direct_sum_certificate(&b.p_space, &b.j_ideal, opts.dmax);
    claims.push(&format!("{prefix}: J ⊕ P = Π"), ds.pass, json!(ds));
    let d = b.d_space(cap)?;
    let (np, nd, rank) = b.gram_rank(cap)?;
    claims.push(
        &format!("{prefix}: pairing between P and D = ker J is perfect"),
        np == nd && rank == np,
        json!({"p_dim": np, "d_dim": nd, "gram_rank": rank}),
    );
    Ok(d)
}

pub fn cmd_verify(doc: &ConfigDocument, theorem: Theorem, opts: &RunOptions) -> Result<Outcome> {
    let c = &doc.config;
    let mut claims = Claims(Vec::new());
    let mut body = Map::new();
    match theorem {
        Theorem::Th1 => {
            for row in theorem1_counts(c)? {
                claims.push(&row.claim, row.pass, json!({"codim": row.codim, "count": row.count}));
            }
            let (s1, _) = seeds(doc, opts);
            let arr = make_arrangement(c, c.lambda(), Some(s1))?;
            let pts = vertex_set(&arr, &c.bases())?;
            let bij = arr.vertices.iter().all(|(b, v)| arr.incident(v) == *b);
            claims.push(
                "vertices of a simple arrangement biject with bases",
                bij && pts.len() == c.bases().len(),
                json!({"lambda": rats(&arr.lambda), "vertices": pts.len(), "bases": c.bases().len()}),
            );
        }
        Theorem::Exzono => {
            let b = central(c)?;
            claims.push(
                "dim P(X) = #bases",
                b.dim() == c.bases().len(),
                json!({"dim": b.dim(), "bases": c.bases().len()}),
            );
            let d = bundle_claims(&mut claims, &b, "central", opts)?;
            least_map_claims(&mut claims, "Π(V(X,λ)) = ker J(X)", c, &c.bases(), &d, doc, opts)?;
        }
        Theorem::Pi => {
            let pts = match &doc.points {
                Some(p) => p.clone(),
                None => {
                    let (s1, _) = seeds(doc, opts);
                    let arr = make_arrangement(c, c.lambda(), Some(s1))?;
                    vertex_set(&arr, &c.bases())?
                }
            };
            let s = least_space(c.n(), &pts)?;
            claims.push(
                "dim Π(V) = #V",
                s.dim() == pts.len(),
                json!({"points": pts.len(), "least_space": subspace(&s)}),
            );
            let r = restriction_certificate(&pts, &s)?;
            claims.push("restriction Π(V) → functions on V is invertible", r.invertible, json!(r));
        }
        Theorem::Plus => {
            let (uni, pts) = zonotope_lattice(c);
            body.insert("unimodular".into(), json!(uni));
            if !uni {
                body.insert(
                    "note".into(),
                    json!("the lattice-point statement needs a unimodular configuration; nothing to check"),
                );
            }
            if let Some(pts) = pts {
                let e = external(&with_some_b0(c))?;
                claims.push(
                    "#(Z(X) ∩ Z^n) = #independents",
                    pts.len() == c.independents().len(),
                    json!({"lattice_points": pts.iter().map(|p| rats(p)).collect::<Vec<_>>(), "independents": c.independents().len()}),
                );
                let pi = least_space(c.n(), &pts)?;
                let (eq, table) = graded_equality(&pi, &e.p_space);
                claims.push("Π(Z(X) ∩ Z^n) = P₊(X)", eq, json!({"degrees": table}));
            }
        }
        Theorem::Basis => {
            let cc = with_some_b0(c);
            for b in [central(&cc)?, external(&cc)?] {
                let q = b.q_basis.as_ref().map_or(0, Vec::len);
                claims.push(
                    &format!("{}: Q polynomials form a basis", b.kind.name()),
                    q == b.dim(),
                    json!({"q_count": q, "dim": b.dim()}),
                );
                claims.push(
                    &format!("{}: Hilbert function from valuations", b.kind.name()),
                    b.hilbert_valuation == b.hilbert_space(),
                    json!({"valuation": b.hilbert_valuation, "space": b.hilbert_space()}),
                );
            }
        }
        Theorem::Explus => {
            let b = external(c)?;
            claims.push(
                "dim P₊(X) = #independents",
                b.dim() == c.independents().len(),
                json!({"dim": b.dim(), "independents": c.independents().len()}),
            );
            let d = bundle_claims(&mut claims, &b, "external", opts)?;
            let ex: Vec<ColumnSet> = c
                .independents()
                .into_iter()
                .map(|i| c.extend_basis(i))
                .collect::<Result<_>>()?;
            least_map_claims(&mut claims, "Π(V₊) = ker J₊(X)", &c.extended()?, &ex, &d, doc, opts)?;
        }
        Theorem::T26 => {
            let fam = doc.family()?;
            let b = semi_external(c, &fam)?;
            body.insert("family".into(), json!(fam.to_vec()));
            let q = b.q_basis.as_ref().map_or(0, Vec::len);
            claims.push(
                "Q_I, I ∈ 𝕀', form a basis of P₊(X,𝕀')",
                q == b.dim() && b.dim() == fam.len(),
                json!({"q_count": q, "dim": b.dim(), "family": fam.len()}),
            );
            let d = bundle_claims(&mut claims, &b, "semi-external", opts)?;
            let ex: Vec<ColumnSet> = fam
                .members()
                .map(|i| c.extend_basis(i))
                .collect::<Result<_>>()?;
            least_map_claims(&mut claims, "Π(V(𝕀')) = ker J₊(X,𝕀')", &c.extended()?, &ex, &d, doc, opts)?;
        }
        Theorem::T28 => {
            let fam = doc.family()?;
            body.insert("family".into(), json!(fam.to_vec()));
            let b = semi_external(&with_some_b0(c), &fam)?;
            let ie = b.ie_ideal.clone().expect("semi-external bundles carry Iε");
            let cap = default_cap(c);
            match c.thm28_condition(&fam) {
                (true, _) => {
                    body.insert("condition".into(), json!({"holds": true}));
                    let eq = ie.graded_equal(&b.i_ideal, cap)?;
                    claims.push("I₊(X,𝕀') = Iε(X,𝕀')", eq, json!({"up_to_degree": cap}));
                    let dec = thm28_decomposition(c, &fam, true)?;
                    let (eq, table) = graded_equality(&dec, &b.p_space);
                    claims.push(
                        "P₊(X,𝕀') = Σ over minimal I of ⋂ P(X ⊔ Z)",
                        eq,
                        json!({"degrees": table}),
                    );
                }
                (false, witness) => {
                    body.insert(
                        "condition".into(),
                        json!({"holds": false, "witness": witness, "diagnostic": Error::ConditionFails(witness.unwrap_or_default()).to_string()}),
                    );
                    let sub = ie.contained_in(&b.i_ideal, cap);
                    claims.push("Iε(X,𝕀') ⊆ I₊(X,𝕀')", sub, json!({"up_to_degree": cap}));
                }
            }
        }
        Theorem::T33 => {
            let i = doc.i_set()?;
            let b = semi_internal(c, i)?;
            claims.push(
                "dim P₋(X,I) = #𝔹₋(X,I)",
                b.dim() == b.index_family.len(),
                json!({"dim": b.dim(), "i_internal_bases": b.index_family}),
            );
            let (eq, table) = graded_equality(&b.p_space, &b.kernel);
            claims.push("P₋(X,I) = ker I₋(X,I)", eq, json!({"degrees": table}));
            claims.push(
                "Hilbert function from valuations of I-internal bases",
                b.hilbert_valuation == b.hilbert_space(),
                json!({"valuation": b.hilbert_valuation, "space": b.hilbert_space()}),
            );
        }
        Theorem::T34 => {
            let i = doc.i_set()?;
            let b = semi_internal(c, i)?;
            let d = bundle_claims(&mut claims, &b, "semi-internal", opts)?;
            least_map_claims(&mut claims, "Π(V₋(X,λ,I)) = ker J₋(X,I)", c, &b.index_family, &d, doc, opts)?;
        }
        Theorem::R37 => {
            let i = doc.i_set()?;
            let r = remark37_check(c, i)?;
            let name = if r.assertion_mode {
                "P₋(X,I) = P₋(X) + span{Q_B : B ∈ 𝔹₋(X,I) \\ 𝔹₋(X)}"
            } else {
                "exploration (#I ≥ 3): equality reported, not asserted"
            };
            claims.push(name, r.pass, json!(r));
        }
    }
    let pass = claims.all_pass();
    body.insert("theorem".into(), json!(theorem.name()));
    body.insert("claims".into(), Value::Array(claims.0));
    Ok(envelope("verify", Some(doc), body, pass))
}

/// Bounds for the exhaustive search over small configurations.
#[derive(Clone, Copy, Debug)]
pub struct SearchBounds {
    pub max_n: usize,
    pub max_cols: usize,
    /// Entries range over `-max_entry..=max_entry`, or `0..=max_entry`
    /// when `nonnegative`.
    pub max_entry: i64,
    pub nonnegative: bool,
}

/// Refuse searches that would enumerate more configurations than this.
pub const SEARCH_LIMIT: u64 = 20_000;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn pool_size(n: usize, b: &SearchBounds) -> u64 {
    if b.nonnegative {
        (b.max_entry as u64 + 1).saturating_pow(n as u32) - 1
    } else {
        ((2 * b.max_entry + 1) as u64).saturating_pow(n as u32) / 2
    }
}

/// Nonzero integer vectors whose first nonzero entry is positive (the
/// spaces only see vectors up to sign).
fn vector_pool(n: usize, b: &SearchBounds) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let low = if b.nonnegative { 0 } else { -b.max_entry };
    let side = (b.max_entry - low + 1) as usize;
    for code in 0..side.pow(n as u32) {
        let v: Vec<i64> = (0..n)
            .map(|k| ((code / side.pow(k as u32)) % side) as i64 + low)
            .collect();
        if v.iter().find(|x| **x != 0).is_some_and(|x| *x > 0) {
            out.push(v);
        }
    }
    out
}

fn multisets(pool: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in start..pool {
        cur.push(x);
        multisets(pool, k, x, cur, out);
        cur.pop();
    }
}

/// Estimated number of configurations the search would visit.
pub fn search_size(b: &SearchBounds) -> u64 {
    let mut total = 0u64;
    for n in 3..=b.max_n {
        let pool = pool_size(n, b);
        for cols in n + 1..=b.max_cols {
            total = total.saturating_add(binomial(pool + cols as u64 - 1, cols as u64));
        }
    }
    total
}

/// Look for independent sets with `#I >= 3` violating the sum formula for
/// semi-internal spaces. Every hit is recomputed through the ideal kernels
/// before it is reported.
pub fn cmd_search_r37(bounds: &SearchBounds) -> Result<Outcome> {
    let size = search_size(bounds);
    if size > SEARCH_LIMIT {
        return Err(Error::Input(format!(
            "search would visit about {size} configurations (limit {SEARCH_LIMIT}); lower --max-n, --max-cols or --max-entry"
        )));
    }
    let mut found = Vec::new();
    let mut visited = 0u64;
    let mut checked = 0u64;
    for n in 3..=bounds.max_n {
        let pool = vector_pool(n, bounds);
        for cols in n + 1..=bounds.max_cols {
            let mut sets = Vec::new();
            multisets(pool.len(), cols, 0, &mut Vec::new(), &mut sets);
            for pick in sets {
                visited += 1;
                let vecs: Vec<&[i64]> = pick.iter().map(|&k| pool[k].as_slice()).collect();
                let Ok(c) = Config::from_i64_columns(&vecs) else {
                    continue;
                };
                if (0..c.len()).any(|x| c.is_coloop(x)) {
                    continue;
                }
                for i in c.independents().into_iter().filter(|i| i.len() >= 3) {
                    checked += 1;
                    let r = remark37_check(&c, i)?;
                    if r.holds == Some(false) && reverify(&c, i)? {
                        found.push(json!({
                            "columns": vecs,
                            "i": i,
                            "report": r,
                        }));
                    }
                }
            }
        }
    }
    let mut body = Map::new();
    body.insert(
        "bounds".into(),
        json!({
            "max_n": bounds.max_n,
            "max_cols": bounds.max_cols,
            "max_entry": bounds.max_entry,
            "nonnegative": bounds.nonnegative,
        }),
    );
    body.insert("configurations_visited".into(), json!(visited));
    body.insert("instances_checked".into(), json!(checked));
    if bounds.max_n < 3 {
        body.insert("note".into(), json!("#I = 3 needs n >= 3; nothing to search"));
    }
    body.insert("violations".into(), Value::Array(found));
    Ok(envelope("search-r37", None, body, true))
}

/// Independent recomputation of both sides: `P₋(X,I)` as `ker I₋(X,I)` and
/// `P₋(X)` as `ker I₋(X)`.
fn reverify(c: &Config, i: ColumnSet) -> Result<bool> {
    let cap = default_cap(c);
    let lhs = semi_internal_ideal(c, i).kernel_stable(cap)?;
    let pminus = internal_ideal(c).kernel_stable(cap)?;
    debug_assert_eq!(Some(&pminus), internal_space(c)?.as_ref());
    let order = c.order_with_last(i);
    let pc = c.permuted(&order);
    let mut pos = vec![0; c.len()];
    for (k, &x) in order.iter().enumerate() {
        pos[x] = k;
    }
    let all = pc.internal_bases_all();
    let extra: Vec<HPoly> = pc
        .internal_bases(i.map(&pos))?
        .into_iter()
        .filter(|b| !all.contains(b))
        .map(|b| crate::zonotopal::poly_of(&pc, pc.passive_set(b)))
        .collect();
    let rhs = pminus.sum(&GradedSubspace::from_spanning(c.n(), &extra));
    Ok(lhs != rhs)
}

/// Canonical rendering of a report: pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports are valid JSON");
    s.push('\n');
    s
}
