//! Input ingestion and output structures.
//!
//! Inputs are JSON files walked by hand so every schema violation can be
//! reported with the exact JSON path of the offending value.  The
//! conventions, shared across all commands:
//!
//! * groups are lists of cyclic-factor moduli, normalized internally to
//!   the invariant-factor chain `d₁ | d₂ | … | d_k` (reports always echo
//!   the normalized factors, and residue vectors index them);
//! * elements and characters are residue vectors, one entry per
//!   invariant factor, reduced modulo the factors;
//! * virtual representations are objects mapping comma-joined character
//!   residues to integer coefficients (the key for the rank-zero group
//!   is the empty string);
//! * rationals are exact strings `"a/b"` (or plain integers);
//! * subgroups are lists of generator residue vectors.
//!
//! Output structures serialize with `serde` and re-parse to equal
//! values, so every emitted report round-trips.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use equisig_core::charseries::{IntersectionFunctional, LinearForm, TruncatedSeries};
use equisig_core::exactnum::{ModPolynomial, Rational};
use equisig_core::exactnum::CyclotomicNumber;
use equisig_core::grouprep::group::MAX_GROUP_ORDER;
use equisig_core::grouprep::{
    DualCharacter, FiniteAbelianGroup, GroupElement, Subgroup, SubgroupIsomorphism, VirtualRep,
};
use equisig_core::gsig::{FixedComponentDescriptor, GManifoldFixedData, NormalPiece};
use equisig_core::lens::LensSpace;
use equisig_core::primeloc::{LocalizedElement, PrimeIdealSpec};

use crate::error::CliError;
use crate::render;

// ---------------------------------------------------------------------------
// Generic JSON walking with path-tracked errors.
// ---------------------------------------------------------------------------

fn schema(path: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::schema(path, message)
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

pub fn obj<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, CliError> {
    v.as_object().ok_or_else(|| schema(path, format!("expected an object, found {}", type_name(v))))
}

pub fn arr<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| schema(path, format!("expected an array, found {}", type_name(v))))
}

pub fn get<'a>(m: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, CliError> {
    m.get(key).ok_or_else(|| schema(path, format!("missing required field `{key}`")))
}

pub fn uint(v: &Value, path: &str) -> Result<u64, CliError> {
    v.as_u64()
        .ok_or_else(|| schema(path, format!("expected a nonnegative integer, found {}", type_name(v))))
}

pub fn int(v: &Value, path: &str) -> Result<i64, CliError> {
    v.as_i64()
        .ok_or_else(|| schema(path, format!("expected an integer, found {}", type_name(v))))
}

pub fn string<'a>(v: &'a Value, path: &str) -> Result<&'a str, CliError> {
    v.as_str().ok_or_else(|| schema(path, format!("expected a string, found {}", type_name(v))))
}

/// Integers of any size: a JSON integer or a decimal string.
pub fn bigint(v: &Value, path: &str) -> Result<BigInt, CliError> {
    if let Some(n) = v.as_i64() {
        return Ok(BigInt::from(n));
    }
    if let Some(n) = v.as_u64() {
        return Ok(BigInt::from(n));
    }
    let s = string(v, path)
        .map_err(|_| schema(path, format!("expected an integer, found {}", type_name(v))))?;
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| schema(path, format!("`{s}` is not an integer")))
}

pub fn u64_list(v: &Value, path: &str) -> Result<Vec<u64>, CliError> {
    let items = arr(v, path)?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| uint(x, &format!("{path}[{i}]")))
        .collect()
}

/// Rejects unknown fields so typos are caught instead of silently
/// ignored.
pub fn reject_unknown(m: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<(), CliError> {
    for key in m.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(schema(
                format!("{path}.{key}"),
                format!("unknown field `{key}` (expected one of: {})", allowed.join(", ")),
            ));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Domain parsers.
// ---------------------------------------------------------------------------

pub fn parse_group(v: &Value, path: &str) -> Result<FiniteAbelianGroup, CliError> {
    let factors = u64_list(v, path)?;
    for (i, &d) in factors.iter().enumerate() {
        if d == 0 {
            return Err(schema(format!("{path}[{i}]"), "group factors must be positive"));
        }
    }
    let order: u128 = factors.iter().map(|&d| d as u128).product();
    if order > MAX_GROUP_ORDER as u128 {
        return Err(schema(path, format!("group order {order} exceeds the cap {MAX_GROUP_ORDER}")));
    }
    Ok(FiniteAbelianGroup::from_factors(&factors))
}

/// A residue list checked against the group's rank and reduced modulo
/// its invariant factors.
pub fn residues_for(
    list: &[u64],
    path: &str,
    group: &FiniteAbelianGroup,
) -> Result<Vec<u64>, CliError> {
    if list.len() != group.rank() {
        return Err(schema(
            path,
            format!(
                "residue vector has {} entries for a rank-{} group (invariant factors {:?})",
                list.len(),
                group.rank(),
                group.factors()
            ),
        ));
    }
    Ok(list.iter().zip(group.factors()).map(|(r, d)| r % d).collect())
}

pub fn parse_element(
    v: &Value,
    path: &str,
    group: &FiniteAbelianGroup,
) -> Result<GroupElement, CliError> {
    let list = u64_list(v, path)?;
    Ok(group.element(&residues_for(&list, path, group)?))
}

pub fn parse_character(
    v: &Value,
    path: &str,
    group: &FiniteAbelianGroup,
) -> Result<DualCharacter, CliError> {
    let list = u64_list(v, path)?;
    Ok(group.character(&residues_for(&list, path, group)?))
}

/// A comma-joined residue key such as `"1,0"`; the empty string denotes
/// the empty residue vector of the rank-zero group.
fn parse_residue_key(key: &str, path: &str, group: &FiniteAbelianGroup) -> Result<Vec<u64>, CliError> {
    let list: Vec<u64> = if key.trim().is_empty() {
        Vec::new()
    } else {
        key.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| schema(path, format!("`{t}` is not a residue")))
            })
            .collect::<Result<_, _>>()?
    };
    residues_for(&list, path, group)
}

pub fn parse_rep(
    v: &Value,
    path: &str,
    group: &FiniteAbelianGroup,
) -> Result<VirtualRep, CliError> {
    let m = obj(v, path)?;
    let mut pairs = Vec::new();
    for (key, val) in m {
        let kpath = format!("{path}[\"{key}\"]");
        let residues = parse_residue_key(key, &kpath, group)?;
        let coeff = bigint(val, &kpath)?;
        pairs.push((group.character(&residues), coeff));
    }
    Ok(VirtualRep::from_pairs(group, pairs))
}

pub fn parse_subgroup(
    v: &Value,
    path: &str,
    group: &FiniteAbelianGroup,
) -> Result<Subgroup, CliError> {
    let items = arr(v, path)?;
    let gens: Vec<GroupElement> = items
        .iter()
        .enumerate()
        .map(|(i, x)| parse_element(x, &format!("{path}[{i}]"), group))
        .collect::<Result<_, _>>()?;
    Ok(Subgroup::generated_by(group, &gens))
}

pub fn parse_rational(v: &Value, path: &str) -> Result<Rational, CliError> {
    if let Some(n) = v.as_i64() {
        return Ok(Rational::from_integer(BigInt::from(n)));
    }
    let s = string(v, path)
        .map_err(|_| schema(path, format!("expected a rational `a/b`, found {}", type_name(v))))?;
    parse_rational_str(s, path)
}

pub fn parse_rational_str(s: &str, path: &str) -> Result<Rational, CliError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let bad = || schema(path, format!("`{s}` is not a rational (`a/b` or an integer)"));
    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(schema(path, format!("`{s}` has a zero denominator")));
    }
    Ok(Rational::new(n, d))
}

pub fn parse_linear_form(v: &Value, path: &str, nvars: usize) -> Result<LinearForm, CliError> {
    let items = arr(v, path)?;
    if items.len() != nvars {
        return Err(schema(
            path,
            format!("a root needs one coefficient per variable ({nvars}), found {}", items.len()),
        ));
    }
    let coeffs: Vec<Rational> = items
        .iter()
        .enumerate()
        .map(|(i, x)| parse_rational(x, &format!("{path}[{i}]")))
        .collect::<Result<_, _>>()?;
    Ok(LinearForm::from_coeffs(coeffs))
}

fn parse_monomial_key(key: &str, path: &str, nvars: usize) -> Result<Vec<u32>, CliError> {
    let list: Vec<u32> = if key.trim().is_empty() {
        Vec::new()
    } else {
        key.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| schema(path, format!("`{t}` is not an exponent")))
            })
            .collect::<Result<_, _>>()?
    };
    if list.len() != nvars {
        return Err(schema(
            path,
            format!("monomial key has {} exponents for {} variables", list.len(), nvars),
        ));
    }
    Ok(list)
}

/// Intersection numbers: an object mapping comma-joined monomial
/// exponents to rationals, defined exactly in the top degree (variables
/// have degree two).
fn parse_functional(
    v: &Value,
    path: &str,
    nvars: usize,
    top_degree: u32,
) -> Result<IntersectionFunctional, CliError> {
    let m = obj(v, path)?;
    let mut entries = Vec::new();
    for (key, val) in m {
        let kpath = format!("{path}[\"{key}\"]");
        let mono = parse_monomial_key(key, &kpath, nvars)?;
        let degree = 2 * mono.iter().sum::<u32>();
        if degree != top_degree {
            return Err(schema(
                kpath,
                format!("monomial has degree {degree}; intersection numbers live in degree {top_degree}"),
            ));
        }
        entries.push((mono, parse_rational(val, &kpath)?));
    }
    Ok(IntersectionFunctional::new(nvars, top_degree, entries))
}

fn parse_piece(
    v: &Value,
    path: &str,
    group: &FiniteAbelianGroup,
    nvars: usize,
) -> Result<NormalPiece, CliError> {
    let m = obj(v, path)?;
    reject_unknown(m, path, &["character", "rank", "roots"])?;
    let character = parse_character(get(m, path, "character")?, &format!("{path}.character"), group)?;
    let rank_path = format!("{path}.rank");
    let rank = uint(get(m, path, "rank")?, &rank_path)?;
    if rank == 0 {
        return Err(schema(rank_path, "a normal piece must have positive rank"));
    }
    let rank = u32::try_from(rank).map_err(|_| schema(&rank_path, "rank is too large"))?;
    let roots_path = format!("{path}.roots");
    let roots_v = arr(get(m, path, "roots")?, &roots_path)?;
    if roots_v.len() != rank as usize {
        return Err(schema(
            roots_path,
            format!("a rank-{rank} piece needs {rank} roots, found {}", roots_v.len()),
        ));
    }
    let roots: Vec<LinearForm> = roots_v
        .iter()
        .enumerate()
        .map(|(i, x)| parse_linear_form(x, &format!("{roots_path}[{i}]"), nvars))
        .collect::<Result<_, _>>()?;
    Ok(NormalPiece { character, rank, roots })
}

fn parse_component(
    v: &Value,
    path: &str,
    group: &FiniteAbelianGroup,
) -> Result<FixedComponentDescriptor, CliError> {
    let m = obj(v, path)?;
    reject_unknown(
        m,
        path,
        &["label", "stabilizer", "sign", "variables", "intersection", "dim", "tangent_roots", "pieces"],
    )?;
    let label = string(get(m, path, "label")?, &format!("{path}.label"))?.to_string();
    let stabilizer =
        parse_subgroup(get(m, path, "stabilizer")?, &format!("{path}.stabilizer"), group)?;
    let sign_path = format!("{path}.sign");
    let sign = int(get(m, path, "sign")?, &sign_path)?;
    if sign != 1 && sign != -1 {
        return Err(schema(sign_path, format!("orientation sign must be 1 or -1, found {sign}")));
    }
    let nvars_path = format!("{path}.variables");
    let nvars = uint(get(m, path, "variables")?, &nvars_path)?;
    let nvars = usize::try_from(nvars).map_err(|_| schema(&nvars_path, "too many variables"))?;
    let dim_path = format!("{path}.dim");
    let dim_f = uint(get(m, path, "dim")?, &dim_path)?;
    let dim_f = u32::try_from(dim_f).map_err(|_| schema(&dim_path, "dimension is too large"))?;
    let functional =
        parse_functional(get(m, path, "intersection")?, &format!("{path}.intersection"), nvars, dim_f)?;
    let tr_path = format!("{path}.tangent_roots");
    let tangent_roots: Vec<LinearForm> = arr(get(m, path, "tangent_roots")?, &tr_path)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_linear_form(x, &format!("{tr_path}[{i}]"), nvars))
        .collect::<Result<_, _>>()?;
    let pieces_path = format!("{path}.pieces");
    let pieces: Vec<NormalPiece> = arr(get(m, path, "pieces")?, &pieces_path)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_piece(x, &format!("{pieces_path}[{i}]"), group, nvars))
        .collect::<Result<_, _>>()?;
    Ok(FixedComponentDescriptor {
        label,
        stabilizer,
        sign,
        nvars,
        functional,
        dim_f,
        tangent_roots,
        pieces,
    })
}

/// Fixed-point data of an action: the group, the manifold dimension,
/// and the fixed components filed per cyclic subgroup.
///
/// ```json
/// { "group": [5], "dim": 4,
///   "filings": [ { "subgroup": [[1]], "components": [ ... ] } ] }
/// ```
pub fn parse_manifold(v: &Value) -> Result<GManifoldFixedData, CliError> {
    let m = obj(v, "$")?;
    reject_unknown(m, "$", &["group", "dim", "filings"])?;
    let group = parse_group(get(m, "$", "group")?, "$.group")?;
    let dim_path = "$.dim";
    let dim_m = uint(get(m, "$", "dim")?, dim_path)?;
    let dim_m = u32::try_from(dim_m).map_err(|_| schema(dim_path, "dimension is too large"))?;
    let filings_path = "$.filings";
    let filings = arr(get(m, "$", "filings")?, filings_path)?;
    let mut map: BTreeMap<Subgroup, Vec<FixedComponentDescriptor>> = BTreeMap::new();
    for (i, filing) in filings.iter().enumerate() {
        let fpath = format!("{filings_path}[{i}]");
        let fm = obj(filing, &fpath)?;
        reject_unknown(fm, &fpath, &["subgroup", "components"])?;
        let sub_path = format!("{fpath}.subgroup");
        let sub = parse_subgroup(get(fm, &fpath, "subgroup")?, &sub_path, &group)?;
        let comps_path = format!("{fpath}.components");
        let comps: Vec<FixedComponentDescriptor> = arr(get(fm, &fpath, "components")?, &comps_path)?
            .iter()
            .enumerate()
            .map(|(j, x)| parse_component(x, &format!("{comps_path}[{j}]"), &group))
            .collect::<Result<_, _>>()?;
        if map.insert(sub, comps).is_some() {
            return Err(schema(sub_path, "duplicate filing subgroup"));
        }
    }
    GManifoldFixedData::new(&group, dim_m, map).map_err(|e| schema("$", e.to_string()))
}

/// A prime ideal description:
/// `{ "group": [...], "element": [...], "p": 5, "residue_prime": [c0, c1, ...] }`.
/// `residue_prime` (coefficients in ascending degree, modulo `p`) is
/// optional; when absent the canonical irreducible factor is taken.
pub struct PrimeInput {
    pub group: FiniteAbelianGroup,
    pub prime: PrimeIdealSpec,
}

pub fn parse_prime_file(v: &Value, prime_flag: Option<&str>) -> Result<PrimeInput, CliError> {
    let m = obj(v, "$")?;
    reject_unknown(m, "$", &["group", "element", "p", "residue_prime"])?;
    let group = parse_group(get(m, "$", "group")?, "$.group")?;
    let (element, p, residue) = match prime_flag {
        Some(flag) => {
            let (residues, p) = parse_prime_flag(flag)?;
            let element = element_from_residues(&residues, &group)?;
            (element, p, None)
        }
        None => {
            let element = parse_element(get(m, "$", "element")?, "$.element", &group)?;
            let p = uint(get(m, "$", "p")?, "$.p")?;
            let residue = match m.get("residue_prime") {
                Some(rv) => {
                    let coeffs = u64_list(rv, "$.residue_prime")?;
                    if p == 0 {
                        return Err(schema(
                            "$.residue_prime",
                            "a characteristic-zero prime has no residue prime",
                        ));
                    }
                    Some(ModPolynomial::new(p, coeffs))
                }
                None => None,
            };
            (element, p, residue)
        }
    };
    let prime = match residue {
        Some(pi) => PrimeIdealSpec::new(&group, &element, p, Some(pi)),
        None => PrimeIdealSpec::with_canonical_residue(&group, &element, p),
    }
    .map_err(|e| schema("$", e.to_string()))?;
    Ok(PrimeInput { group, prime })
}

/// `--element "g1,g2,..."`: comma-joined residues (empty for the
/// rank-zero group).
pub fn parse_element_flag(s: &str, group: &FiniteAbelianGroup) -> Result<GroupElement, CliError> {
    let residues = parse_u64_csv(s).map_err(|m| CliError::Usage(format!("--element: {m}")))?;
    element_from_residues(&residues, group)
}

/// A raw residue list checked and reduced against a group, with usage
/// errors (for flag-supplied elements).
pub fn element_from_residues(
    residues: &[u64],
    group: &FiniteAbelianGroup,
) -> Result<GroupElement, CliError> {
    if residues.len() != group.rank() {
        return Err(CliError::Usage(format!(
            "element has {} residues for a rank-{} group (invariant factors {:?})",
            residues.len(),
            group.rank(),
            group.factors()
        )));
    }
    let reduced: Vec<u64> = residues.iter().zip(group.factors()).map(|(r, d)| r % d).collect();
    Ok(group.element(&reduced))
}

/// `--prime "g1,g2,...;p"`: an evaluation element and a residual
/// characteristic.
pub fn parse_prime_flag(s: &str) -> Result<(Vec<u64>, u64), CliError> {
    let (g, p) = s
        .split_once(';')
        .ok_or_else(|| CliError::Usage("--prime expects \"g1,g2,...;p\"".to_string()))?;
    let residues = parse_u64_csv(g).map_err(|m| CliError::Usage(format!("--prime: {m}")))?;
    let p = p
        .trim()
        .parse::<u64>()
        .map_err(|_| CliError::Usage(format!("--prime: `{}` is not a characteristic", p.trim())))?;
    Ok((residues, p))
}

fn parse_u64_csv(s: &str) -> Result<Vec<u64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| format!("`{}` is not a residue", t.trim())))
        .collect()
}

/// One of three lens requests:
/// `{"search": {"n_max": N, "m": M}}`,
/// `{"compare": {"left": {"n":..,"weights":[..]}, "right": ...}}`, or
/// `{"rho": {"n":..,"weights":[..]}}`.
pub enum LensRequest {
    Search { n_max: u64, m: usize },
    Compare { left: LensSpace, right: LensSpace },
    Rho { space: LensSpace },
}

pub fn parse_lens_space(v: &Value, path: &str) -> Result<LensSpace, CliError> {
    let m = obj(v, path)?;
    reject_unknown(m, path, &["n", "weights"])?;
    let n = uint(get(m, path, "n")?, &format!("{path}.n"))?;
    let weights = u64_list(get(m, path, "weights")?, &format!("{path}.weights"))?;
    LensSpace::new(n, &weights).map_err(|e| schema(path, e.to_string()))
}

pub fn parse_lens_request(v: &Value) -> Result<LensRequest, CliError> {
    let m = obj(v, "$")?;
    reject_unknown(m, "$", &["search", "compare", "rho"])?;
    if m.len() != 1 {
        return Err(schema("$", "expected exactly one of `search`, `compare`, `rho`"));
    }
    if let Some(s) = m.get("search") {
        let path = "$.search";
        let sm = obj(s, path)?;
        reject_unknown(sm, path, &["n_max", "m"])?;
        let n_max = uint(get(sm, path, "n_max")?, &format!("{path}.n_max"))?;
        if !(2..=200).contains(&n_max) {
            return Err(schema(format!("{path}.n_max"), "n_max must lie in 2..=200"));
        }
        let mpath = format!("{path}.m");
        let m_val = uint(get(sm, path, "m")?, &mpath)?;
        if !(1..=4).contains(&m_val) {
            return Err(schema(mpath, "m must lie in 1..=4"));
        }
        return Ok(LensRequest::Search { n_max, m: m_val as usize });
    }
    if let Some(c) = m.get("compare") {
        let path = "$.compare";
        let cm = obj(c, path)?;
        reject_unknown(cm, path, &["left", "right"])?;
        let left = parse_lens_space(get(cm, path, "left")?, &format!("{path}.left"))?;
        let right = parse_lens_space(get(cm, path, "right")?, &format!("{path}.right"))?;
        return Ok(LensRequest::Compare { left, right });
    }
    let space = parse_lens_space(m.get("rho").expect("checked above"), "$.rho")?;
    Ok(LensRequest::Rho { space })
}

// ---------------------------------------------------------------------------
// Output structures.  All round-trip through serde.
// ---------------------------------------------------------------------------

/// A cyclotomic number: minimal conductor, exact power-basis
/// coefficients, and the symbolic rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycDto {
    pub conductor: u64,
    pub coefficients: Vec<String>,
    pub pretty: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub decimal: Option<String>,
}

pub fn cyc_dto(z: &CyclotomicNumber, decimal: bool) -> CycDto {
    CycDto {
        conductor: z.conductor(),
        coefficients: render::cyclotomic_coefficients(z),
        pretty: z.to_string(),
        decimal: decimal.then(|| render::cyclotomic_decimal(z)),
    }
}

/// The symbolic form for human output, with the decimal approximation
/// appended when one was requested.
pub fn cyc_line(dto: &CycDto) -> String {
    match &dto.decimal {
        Some(d) => format!("{} \u{2248} {}", dto.pretty, d),
        None => dto.pretty.clone(),
    }
}

/// A virtual representation over the echoed (normalized) group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDto {
    pub group: Vec<u64>,
    pub terms: BTreeMap<String, String>,
    pub pretty: String,
}

pub fn rep_dto(rep: &VirtualRep) -> RepDto {
    let terms = rep
        .terms()
        .map(|(chi, c)| {
            let key = chi
                .residues()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            (key, render::bigint_str(c))
        })
        .collect();
    RepDto {
        group: rep.group().factors().to_vec(),
        terms,
        pretty: render::rep_pretty(rep),
    }
}

/// A subgroup: canonical generators, the abstract invariant factors,
/// and the order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupDto {
    pub generators: Vec<Vec<u64>>,
    pub factors: Vec<u64>,
    pub order: u64,
}

pub fn subgroup_dto(h: &Subgroup) -> SubgroupDto {
    let iso = SubgroupIsomorphism::materialize(h);
    SubgroupDto {
        generators: iso.generator_images().iter().map(|g| g.residues().to_vec()).collect(),
        factors: iso.group().factors().to_vec(),
        order: h.order(),
    }
}

/// A prime ideal: the group, the evaluation element, the residual
/// characteristic (0 for characteristic zero), and the residue prime's
/// coefficients when the characteristic is positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDto {
    pub group: Vec<u64>,
    pub element: Vec<u64>,
    pub characteristic: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residue_prime: Option<Vec<u64>>,
    pub element_order: u64,
}

pub fn prime_dto(prime: &PrimeIdealSpec) -> PrimeDto {
    PrimeDto {
        group: prime.group().factors().to_vec(),
        element: prime.element().residues().to_vec(),
        characteristic: prime.characteristic(),
        residue_prime: prime.residue_prime().map(|pi| pi.coefficients().to_vec()),
        element_order: prime.element_order(),
    }
}

/// A fraction over the localization, with its unit certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizedDto {
    pub numerator: RepDto,
    pub denominator: RepDto,
    pub denominator_is_unit: bool,
}

pub fn localized_dto(x: &LocalizedElement) -> LocalizedDto {
    LocalizedDto {
        numerator: rep_dto(x.numerator()),
        denominator: rep_dto(x.denominator()),
        denominator_is_unit: x.prime().is_unit_localized(x.denominator()),
    }
}

/// A truncated series term: monomial exponents and the exact
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermDto {
    pub monomial: Vec<u32>,
    pub coefficient: CycDto,
}

/// A truncated multivariate series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDto {
    pub variables: usize,
    pub truncation: u32,
    pub terms: Vec<SeriesTermDto>,
}

pub fn series_dto(s: &TruncatedSeries, decimal: bool) -> SeriesDto {
    SeriesDto {
        variables: s.nvars(),
        truncation: s.truncation(),
        terms: s
            .terms()
            .map(|(mono, c)| SeriesTermDto { monomial: mono.clone(), coefficient: cyc_dto(c, decimal) })
            .collect(),
    }
}

/// A lens space `{n, weights}` with its display name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensSpaceDto {
    pub n: u64,
    pub weights: Vec<u64>,
    pub pretty: String,
}

pub fn lens_space_dto(l: &LensSpace) -> LensSpaceDto {
    LensSpaceDto { n: l.order(), weights: l.weights().to_vec(), pretty: l.to_string() }
}

/// One certificate term: an induction from a cyclic subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinTermDto {
    pub subgroup: SubgroupDto,
    /// Character residues on the subgroup's abstract factors.
    pub character: Vec<u64>,
    pub coefficient: String,
}

pub fn artin_term_dto(term: &equisig_core::artin::ArtinTerm) -> ArtinTermDto {
    ArtinTermDto {
        subgroup: subgroup_dto(&term.subgroup),
        character: term.character.residues().to_vec(),
        coefficient: render::bigint_str(&term.coefficient),
    }
}

/// Outcome of the support-descent certification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentDto {
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unit_witness_outside: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub annihilates_restriction_kernel: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

pub fn descent_dto(
    outcome: &Result<equisig_core::primeloc::SupportDescentReport, equisig_core::primeloc::PrimeError>,
) -> DescentDto {
    match outcome {
        Ok(r) => DescentDto {
            certified: r.certified,
            index: Some(r.index),
            unit_witness_outside: Some(r.unit_witness_outside),
            annihilates_restriction_kernel: Some(r.annihilates_restriction_kernel),
            reason: None,
        },
        Err(e) => DescentDto {
            certified: false,
            index: None,
            unit_witness_outside: None,
            annihilates_restriction_kernel: None,
            reason: Some(e.to_string()),
        },
    }
}

/// An inflation step between invariant-factor presentations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InflationDto {
    pub from_factors: Vec<u64>,
    pub to_factors: Vec<u64>,
}

/// One decomposition entry: a fixed-component orbit with its localized
/// fiber data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeEntryDto {
    pub label: String,
    pub orbit_size: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inflation: Option<InflationDto>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fiber_class: Option<LocalizedDto>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fiber_series: Option<SeriesDto>,
    pub base_token: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pairing: Option<CycDto>,
}

pub fn decompose_entry_dto(
    entry: &equisig_core::gsig::ContributionEntry,
    decimal: bool,
) -> DecomposeEntryDto {
    DecomposeEntryDto {
        label: entry.label.clone(),
        orbit_size: entry.orbit_size,
        inflation: entry.inflation.as_ref().map(|s| InflationDto {
            from_factors: s.from_factors.clone(),
            to_factors: s.to_factors.clone(),
        }),
        fiber_class: entry.fiber_class.as_ref().map(localized_dto),
        fiber_series: entry.fiber_series.as_ref().map(|s| series_dto(s, decimal)),
        base_token: entry.base_token.clone(),
        pairing: entry.pairing.as_ref().map(|z| cyc_dto(z, decimal)),
    }
}

/// The structural decomposition of a localized class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeDto {
    pub prime: PrimeDto,
    pub branch: String,
    pub entries: Vec<DecomposeEntryDto>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pairing_total: Option<CycDto>,
}

pub fn branch_name(branch: equisig_core::gsig::DecompositionBranch) -> &'static str {
    use equisig_core::gsig::DecompositionBranch;
    match branch {
        DecompositionBranch::Collapse => "collapse",
        DecompositionBranch::Restriction => "restriction",
        DecompositionBranch::FixedSet => "fixed-set",
    }
}

/// One exact rho-vector entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoEntryDto {
    pub k: u64,
    pub value: CycDto,
}

pub fn rho_dto(rho: &equisig_core::lens::RhoVector, decimal: bool) -> Vec<RhoEntryDto> {
    rho.entries().map(|(k, v)| RhoEntryDto { k, value: cyc_dto(v, decimal) }).collect()
}

/// A homotopy-equivalent, non-isometric pair with its rho-vector
/// witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDto {
    pub n: u64,
    pub left: LensSpaceDto,
    pub right: LensSpaceDto,
    pub first_k: u64,
    pub difference: CycDto,
}

pub fn pair_dto(pair: &equisig_core::lens::ExoticPair, decimal: bool) -> PairDto {
    PairDto {
        n: pair.left.order(),
        left: lens_space_dto(&pair.left),
        right: lens_space_dto(&pair.right),
        first_k: pair.first_k,
        difference: cyc_dto(&pair.difference, decimal),
    }
}

/// One self-test check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub passed: bool,
}
