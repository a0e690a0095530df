//! Commands behind the `rootfold` binary. Each command returns a [`Report`]
//! that renders either as plain text or as JSON.
//!
//! JSON conventions: matrices are arrays of rows; integer entries are JSON
//! numbers and non-integral rationals are `"num/den"` strings. Nodes and
//! permutations are 1-based. Keys are emitted in sorted order, so repeated
//! runs produce byte-identical output unless `--timing` is requested.

use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use rootfold::cohomology::{CaseReport, PrintedMatch};
use rootfold::diagrams::OrbitKind;
use rootfold::{
    build_action, contains_minus_identity, diagram_automorphisms, dynkaut_integrality, fold, generate_weyl,
    h1_classes, enumerate_cocycles, involution_classes, twist_character, verify_folding_iso, verify_kernel_suite,
    Bounds, CharacterTable, DiagramCollection, DiagramType, DynkinDiagram, IntMatrix, KernelReport, NodePermutation,
    RatMatrix, SmallMatrix, Suite,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Result of one command.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub text: String,
    /// False when a verification did not pass.
    pub ok: bool,
    pub elapsed_ms: Option<u128>,
}

impl Report {
    fn new(command: &str, inputs: Value, results: Value, text: String) -> Self {
        Self {
            command: command.into(),
            inputs,
            results,
            text,
            ok: true,
            elapsed_ms: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "ok": self.ok,
            "version": VERSION,
        });
        if let Some(ms) = self.elapsed_ms {
            v["timing_ms"] = json!(ms as u64);
        }
        v
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = self.text.clone();
                if let Some(ms) = self.elapsed_ms {
                    let _ = writeln!(s, "time: {ms} ms");
                }
                s
            }
        }
    }
}

/// Runs `f` and records its wall time on the report when `timing` is set.
pub fn timed(timing: bool, f: impl FnOnce() -> Result<Report>) -> Result<Report> {
    let start = Instant::now();
    let mut r = f()?;
    if timing {
        r.elapsed_ms = Some(start.elapsed().as_millis());
    }
    Ok(r)
}

// ---- matrix encoding ----

fn encode_int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn encode_rat(x: &BigRational) -> Value {
    if x.is_integer() {
        encode_int(x.numer())
    } else {
        json!(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn encode_int_matrix(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(encode_int).collect())).collect())
}

pub fn encode_rat_matrix(m: &RatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(encode_rat).collect())).collect())
}

pub fn encode_small(m: &SmallMatrix) -> Value {
    json!(m.to_rows())
}

fn decode_entry(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| anyhow!("non-integer number {n}"))?;
            Ok(BigRational::from_integer(i.into()))
        }
        Value::String(s) => {
            let (num, den) = s.split_once('/').unwrap_or((s, "1"));
            let num: BigInt = num.trim().parse().with_context(|| format!("bad numerator in {s:?}"))?;
            let den: BigInt = den.trim().parse().with_context(|| format!("bad denominator in {s:?}"))?;
            if den.is_zero() {
                bail!("zero denominator in {s:?}");
            }
            Ok(BigRational::new(num, den))
        }
        other => bail!("matrix entry {other} is neither a number nor a string"),
    }
}

/// Inverse of the matrix encoders.
pub fn decode_matrix(v: &Value) -> Result<RatMatrix> {
    let rows = v.as_array().ok_or_else(|| anyhow!("matrix must be an array of rows"))?;
    let cols = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
    let mut data = Vec::with_capacity(rows.len() * cols);
    for row in rows {
        let row = row.as_array().ok_or_else(|| anyhow!("matrix row must be an array"))?;
        if row.len() != cols {
            bail!("ragged matrix");
        }
        for x in row {
            data.push(decode_entry(x)?);
        }
    }
    Ok(RatMatrix::new(rows.len(), cols, data)?)
}

fn rat_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn matrix_lines(rows: &[Vec<String>], indent: &str) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(s, "{indent}[{}]", cells.join(" "));
    }
    s
}

fn int_lines(m: &IntMatrix, indent: &str) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect();
    matrix_lines(&rows, indent)
}

fn small_lines(m: &SmallMatrix, indent: &str) -> String {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    matrix_lines(&rows, indent)
}

// ---- commands ----

fn parse_actions(c: &DiagramCollection, actions: &[String]) -> Result<Vec<NodePermutation>> {
    if actions.is_empty() {
        bail!("at least one --action is required");
    }
    Ok(actions
        .iter()
        .map(|a| NodePermutation::parse(a, c.rank()))
        .collect::<rootfold::Result<Vec<_>>>()?)
}

pub fn cmd_gram(spec: &str) -> Result<Report> {
    let c = DiagramCollection::parse(spec)?;
    let g = c.gram_matrix();
    let text = format!("gram {c} (rank {})\n{}", c.rank(), int_lines(&g, "  "));
    Ok(Report::new(
        "gram",
        json!({ "diagram": c.to_string() }),
        json!({
            "rank": c.rank(),
            "multiplicities": (0..c.rank()).map(|i| c.multiplicity(i)).collect::<Vec<_>>(),
            "gram": encode_int_matrix(&g),
        }),
        text,
    ))
}

pub fn cmd_weyl(spec: &str, bounds: Bounds, involutions: bool, minus_identity: bool) -> Result<Report> {
    let c = DiagramCollection::parse(spec)?;
    let w = generate_weyl(&c, bounds.max_order)?;
    let mut text = format!("weyl {c}: order {}\n", w.order());
    let mut results = json!({
        "order": w.order(),
        "rank": w.rank(),
        "generators": w.generators().iter().map(encode_small).collect::<Vec<_>>(),
    });
    if minus_identity {
        let has = contains_minus_identity(&w);
        results["contains_minus_identity"] = json!(has);
        let _ = writeln!(text, "contains -I: {has}");
    }
    if involutions {
        let classes = involution_classes(w.group())?;
        let _ = writeln!(text, "involution classes: {}", classes.len());
        let mut list = Vec::new();
        for cl in &classes {
            let _ = writeln!(
                text,
                "  -1 multiplicity {}, class size {}",
                cl.minus_one_multiplicity, cl.class_size
            );
            list.push(json!({
                "minus_one_multiplicity": cl.minus_one_multiplicity,
                "class_size": cl.class_size,
                "representative": encode_small(&cl.representative),
            }));
        }
        results["involutions"] = json!(list);
    }
    Ok(Report::new(
        "weyl",
        json!({ "diagram": c.to_string(), "max_order": bounds.max_order.to_string() }),
        results,
        text,
    ))
}

fn orbit_kind(k: OrbitKind) -> &'static str {
    match k {
        OrbitKind::Orthogonal => "orthogonal",
        OrbitKind::Paired => "paired",
    }
}

pub fn cmd_fold(spec: &str, actions: &[String], bounds: Bounds) -> Result<Report> {
    let c = DiagramCollection::parse(spec)?;
    let gens = parse_actions(&c, actions)?;
    let sub = c.generate_subgroup(&gens, bounds.max_group)?;
    let f = fold(&c, &sub)?;
    let w = generate_weyl(&c, bounds.max_order)?;
    let r = verify_folding_iso(&w, &sub, &f, bounds.max_order)?;
    let quotient = f.classified_type.as_ref().map(ToString::to_string);

    let mut text = format!("fold {c} by a group of order {}\n", sub.len());
    let mut orbits = Vec::new();
    for o in &f.orbits {
        let nodes: Vec<usize> = o.nodes.iter().map(|x| x + 1).collect();
        let _ = writeln!(text, "  orbit {:?}: {}", nodes, orbit_kind(o.kind));
        orbits.push(json!({ "nodes": nodes, "kind": orbit_kind(o.kind) }));
    }
    let _ = write!(text, "folded gram\n{}", int_lines(&f.gram, "  "));
    let _ = writeln!(text, "quotient type: {}", quotient.as_deref().unwrap_or("unrecognised"));
    let _ = writeln!(
        text,
        "|W^G| = {}, image order {}, quotient Weyl order {}",
        r.fixed_order, r.image_order, r.quotient_order
    );
    let _ = writeln!(text, "isomorphism: {}", r.is_isomorphism);
    Ok(Report::new(
        "fold",
        json!({ "diagram": c.to_string(), "action": actions }),
        json!({
            "group_order": sub.len(),
            "orbits": orbits,
            "folded_gram": encode_int_matrix(&f.gram),
            "quotient_type": quotient,
            "fixed_order": r.fixed_order,
            "image_order": r.image_order,
            "quotient_order": r.quotient_order,
            "classified_order": r.classified_order.map(|o| o.to_string()),
            "images_invariant": r.images_invariant,
            "relations_hold": r.relations_hold,
            "restriction_agrees": r.restriction_agrees,
            "is_isomorphism": r.is_isomorphism,
        }),
        text,
    ))
}

pub fn cmd_lemma34(max_rank: usize) -> Result<Report> {
    let mut text = format!("(C - I) A^-1 for ADE diagrams of rank <= {max_rank}\n");
    let mut cases = Vec::new();
    let mut all_flagged = true;
    for kind in DiagramType::ade_up_to(max_rank) {
        let d = DynkinDiagram::new(kind);
        for p in diagram_automorphisms(&DiagramCollection::single(kind)) {
            if p.is_identity() {
                continue;
            }
            let r = dynkaut_integrality(&d, &p)?;
            all_flagged &= !r.all_integral;
            let witness = r.witness.as_ref().map(|(i, j, v)| {
                json!({ "row": i + 1, "col": j + 1, "value": rat_string(v) })
            });
            let _ = writeln!(
                text,
                "  {kind} {p}: {}",
                match &r.witness {
                    Some((i, j, v)) => format!("non-integral, entry ({}, {}) = {}", i + 1, j + 1, rat_string(v)),
                    None => "all entries integral".into(),
                }
            );
            cases.push(json!({
                "diagram": kind.to_string(),
                "automorphism": p.to_string(),
                "all_integral": r.all_integral,
                "witness": witness,
                "matrix": encode_rat_matrix(&r.matrix),
            }));
        }
    }
    let _ = writeln!(text, "pairs: {}, all non-integral: {all_flagged}", cases.len());
    Ok(Report::new(
        "lemma34",
        json!({ "max_rank": max_rank }),
        json!({ "cases": cases, "all_non_integral": all_flagged }),
        text,
    ))
}

fn character_json(a: &rootfold::GroupAction<'_>, ch: &CharacterTable) -> Value {
    let map: serde_json::Map<String, Value> = a
        .elements()
        .iter()
        .zip(&ch.values)
        .map(|(p, v)| (p.to_string(), json!(v)))
        .collect();
    Value::Object(map)
}

fn kernel_json(k: &KernelReport) -> Value {
    json!({ "kernel_size": k.kernel_size, "trivial_kernel": k.trivial_kernel })
}

pub fn cmd_h1(spec: &str, actions: &[String], kernel: bool, bounds: Bounds) -> Result<Report> {
    let c = DiagramCollection::parse(spec)?;
    let gens = parse_actions(&c, actions)?;
    let w = generate_weyl(&c, bounds.max_order)?;
    let a = build_action(&w, &gens, bounds.max_group)?;
    let cocycles = enumerate_cocycles(&a)?;
    let set = h1_classes(&a, &cocycles)?;
    let k = rootfold::cohomology::kernel_report(&a, &cocycles, &set)?;

    let mut text = format!(
        "H1 of a group of order {} acting on W({c}) (order {})\ncocycles: {}\nclasses: {}\n",
        a.order(),
        w.order(),
        k.cocycle_count,
        k.class_count
    );
    let mut classes = Vec::new();
    for (i, (cl, rep)) in k.classes.iter().zip(&set.representatives).enumerate() {
        let _ = writeln!(text, "class {i}: orbit size {}", cl.orbit_size);
        for (g, m) in a.generator_perms().iter().zip(&cl.generator_values) {
            let _ = write!(text, "  value at {g}\n{}", small_lines(m, "    "));
        }
        let mut entry = json!({
            "orbit_size": cl.orbit_size,
            "generator_values": cl.generator_values.iter().map(encode_small).collect::<Vec<_>>(),
        });
        if kernel {
            let ch = twist_character(&a, rep)?;
            let _ = writeln!(text, "  character {:?}, trivial in GL: {}", ch.values, cl.trivial_in_gl);
            entry["character"] = character_json(&a, &ch);
            entry["trivial_in_gl"] = json!(cl.trivial_in_gl);
        }
        classes.push(entry);
    }
    let mut results = json!({
        "group_order": a.order(),
        "weyl_order": w.order(),
        "cocycle_count": k.cocycle_count,
        "class_count": k.class_count,
        "classes": classes,
    });
    if kernel {
        let _ = writeln!(text, "kernel size: {}, trivial kernel: {}", k.kernel_size, k.trivial_kernel);
        results["kernel"] = kernel_json(&k);
    }
    Ok(Report::new(
        "h1",
        json!({ "diagram": c.to_string(), "action": actions, "kernel": kernel }),
        results,
        text,
    ))
}

fn printed_name(m: PrintedMatch) -> &'static str {
    match m {
        PrintedMatch::AsPrinted => "as_printed",
        PrintedMatch::Transposed => "transposed",
        PrintedMatch::Unmatched => "unmatched",
    }
}

fn case_json(case: &CaseReport) -> Value {
    let mut v = json!({
        "label": case.label,
        "diagram": case.diagram,
        "action": case.action,
        "passed": case.passed(),
        "checks": case.checks,
    });
    if let Some(k) = &case.kernel {
        v["group_order"] = json!(k.group_order);
        v["weyl_order"] = json!(k.weyl_order);
        v["cocycle_count"] = json!(k.cocycle_count);
        v["class_count"] = json!(k.class_count);
        v["orbit_sizes"] = json!(k.orbit_sizes());
        v["kernel"] = kernel_json(k);
    }
    if let Some(e) = &case.error {
        v["error"] = json!(e);
    }
    if let Some(m) = case.printed_match {
        v["printed_match"] = json!(printed_name(m));
    }
    v
}

pub fn cmd_verify(suite: &str, bounds: Bounds) -> Result<Report> {
    let s = Suite::resolve(suite)?;
    let r = verify_kernel_suite(&s, bounds);
    let mut text = format!("suite {} ({} cases)\n", r.name, r.cases.len());
    for case in &r.cases {
        let status = if case.passed() { "PASS" } else { "FAIL" };
        let mut line = format!("{status} {}", case.label);
        if let Some(k) = &case.kernel {
            let _ = write!(
                line,
                ": |G| = {}, |W| = {}, cocycles {}, classes {}, kernel {}",
                k.group_order, k.weyl_order, k.cocycle_count, k.class_count, k.kernel_size
            );
        }
        if let Some(m) = case.printed_match {
            let _ = write!(line, ", printed representative {}", printed_name(m));
        }
        if let Some(e) = &case.error {
            let _ = write!(line, ": error: {e}");
        }
        let _ = writeln!(text, "{line}");
        for c in case.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(text, "  {} failed: {}", c.name, c.detail);
        }
    }
    let passed = r.passed();
    let _ = writeln!(text, "{}", if passed { "all passed" } else { "FAILED" });
    let mut report = Report::new(
        "verify",
        json!({ "suite": r.name }),
        json!({
            "passed": passed,
            "cases": r.cases.iter().map(case_json).collect::<Vec<_>>(),
        }),
        text,
    );
    report.ok = passed;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let m = RatMatrix::new(
            2,
            2,
            vec![
                BigRational::new(1.into(), 2.into()),
                BigRational::from_integer((-3).into()),
                BigRational::from_integer(0.into()),
                BigRational::new((-5).into(), 7.into()),
            ],
        )
        .unwrap();
        let v = encode_rat_matrix(&m);
        assert_eq!(v, json!([["1/2", -3], [0, "-5/7"]]));
        assert_eq!(decode_matrix(&v).unwrap(), m);
    }

    #[test]
    fn decode_rejects_garbage() {
        assert!(decode_matrix(&json!([[1, 2], [3]])).is_err());
        assert!(decode_matrix(&json!([["1/0"]])).is_err());
        assert!(decode_matrix(&json!([[1.5]])).is_err());
        assert!(decode_matrix(&json!(3)).is_err());
    }

    #[test]
    fn gram_a2() {
        let r = cmd_gram("A2").unwrap();
        assert_eq!(r.results["gram"], json!([[-2, 1], [1, -2]]));
    }
}
