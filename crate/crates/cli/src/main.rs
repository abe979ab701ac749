use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qbary::io::{
    lattice_json, matrix_json, polynomial_json, rational_function_json, rational_json, vector_json, PolytopeDocument,
    ResultDocument,
};
use qbary::polytope::{measure, Body};
use qbary::toricrr::{mixed_volume, VirtualPolytope};
use qbary::{ehrhart, expansion, fixtures, stability, toricrr, Error, LatticePoint, Result};
use serde_json::{json, Value};

mod table;

#[derive(Parser)]
#[command(name = "qbary", version, about = "Exact quantized barycenters of lattice polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    /// With --table, add a decimal column (display only).
    #[arg(long, global = true)]
    approx: bool,
}

#[derive(Args, Clone, Default)]
struct Input {
    /// Polytope JSON file; repeat for mixed-volume.
    #[arg(long)]
    input: Vec<String>,
    /// Bundled fixture name; repeat for mixed-volume.
    #[arg(long)]
    fixture: Vec<String>,
    /// Inline rays, e.g. "1,0;0,1;-1,-1".
    #[arg(long, allow_hyphen_values = true)]
    rays: Option<String>,
    /// Inline offsets, e.g. "1,1,1".
    #[arg(long, allow_hyphen_values = true)]
    offsets: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice points of kP.
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        k: i64,
    },
    /// Quantized barycenter Bc_k.
    Bck {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: i64,
    },
    /// Volume, barycenter and boundary data.
    Bc {
        #[command(flatten)]
        input: Input,
    },
    Ehrhart {
        #[command(flatten)]
        input: Input,
    },
    Reciprocity {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        k: i64,
    },
    /// Coefficients a_j of Bc_k = sum a_j k^-j.
    Expand {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// The rooftop polytope over P.
    Rooftop {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        q: Option<i64>,
    },
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Mixed volume of the given polytopes.
    MixedVolume {
        #[command(flatten)]
        input: Input,
        /// Multiplicity of each polytope, e.g. "1,1".
        #[arg(long)]
        mult: Option<String>,
    },
    /// Ehrhart coefficients from mixed volumes of divisor polytopes.
    Hrr {
        #[command(flatten)]
        input: Input,
    },
    RooftopCoeffs {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// delta_k, or delta when --k is omitted.
    Delta {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: Option<i64>,
    },
    DeltaSeq {
        #[command(flatten)]
        input: Input,
        /// Largest k listed.
        #[arg(long, default_value_t = 6)]
        k: i64,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Donaldson-Futaki coefficients along v.
    Df {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Rays of the rooftop fan.
    Fan {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Count { .. } => "count",
            Command::Bck { .. } => "bck",
            Command::Bc { .. } => "bc",
            Command::Ehrhart { .. } => "ehrhart",
            Command::Reciprocity { .. } => "reciprocity",
            Command::Expand { .. } => "expand",
            Command::Rooftop { .. } => "rooftop",
            Command::Classify { .. } => "classify",
            Command::MixedVolume { .. } => "mixed-volume",
            Command::Hrr { .. } => "hrr",
            Command::RooftopCoeffs { .. } => "rooftop-coeffs",
            Command::Delta { .. } => "delta",
            Command::DeltaSeq { .. } => "delta-seq",
            Command::Df { .. } => "df",
            Command::Fan { .. } => "fan",
        }
    }

    fn input(&self) -> &Input {
        match self {
            Command::Count { input, .. }
            | Command::Bck { input, .. }
            | Command::Bc { input }
            | Command::Ehrhart { input }
            | Command::Reciprocity { input, .. }
            | Command::Expand { input, .. }
            | Command::Rooftop { input, .. }
            | Command::Classify { input }
            | Command::MixedVolume { input, .. }
            | Command::Hrr { input }
            | Command::RooftopCoeffs { input, .. }
            | Command::Delta { input, .. }
            | Command::DeltaSeq { input, .. }
            | Command::Df { input, .. }
            | Command::Fan { input, .. } => input,
        }
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| Error::InvalidInput(format!("bad integer {x:?}: {e}"))))
        .collect()
}

fn parse_rows(s: &str) -> Result<Vec<LatticePoint>> {
    s.split(';').map(parse_ints).collect()
}

impl Input {
    fn documents(&self) -> Result<Vec<(Option<String>, PolytopeDocument)>> {
        let mut docs = Vec::new();
        for path in &self.input {
            let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?;
            let doc = PolytopeDocument::from_json(&text).map_err(|e| match e {
                Error::InvalidInput(m) => Error::InvalidInput(format!("{path}: {m}")),
                other => other,
            })?;
            let name = doc.name.clone().or_else(|| Some(path.clone()));
            docs.push((name, doc));
        }
        for name in &self.fixture {
            docs.push((Some(name.clone()), fixtures::load(name)?));
        }
        match (&self.rays, &self.offsets) {
            (Some(r), Some(o)) => docs.push((None, PolytopeDocument::from_halfspaces(parse_rows(r)?, parse_ints(o)?))),
            (None, None) => {}
            _ => return Err(Error::InvalidInput("--rays and --offsets must be given together".into())),
        }
        if docs.is_empty() {
            return Err(Error::InvalidInput("no input; use --input, --fixture or --rays/--offsets".into()));
        }
        Ok(docs)
    }

    fn single(&self) -> Result<(Option<String>, PolytopeDocument)> {
        let mut docs = self.documents()?;
        if docs.len() != 1 {
            return Err(Error::InvalidInput(format!("expected one polytope, got {}", docs.len())));
        }
        Ok(docs.remove(0))
    }
}

/// Records an optional closed form next to the enumerated value.
fn compare<T: PartialEq + std::fmt::Debug>(doc: &mut ResultDocument, check: &str, direct: &T, closed: Result<T>) -> Result<()> {
    match closed {
        Ok(c) => {
            let ok = c == *direct;
            doc.check(check, ok, (!ok).then(|| format!("closed form {c:?}, direct {direct:?}")));
            Ok(())
        }
        Err(Error::Unsupported(_)) => Ok(()),
        Err(e) => Err(e),
    }
}

fn run(cmd: &Command) -> Result<ResultDocument> {
    let mut doc = ResultDocument::new(cmd.name(), None);
    if let Command::MixedVolume { input, mult } = cmd {
        let docs = input.documents()?;
        doc.input = Some(docs.iter().map(|(n, _)| n.clone().unwrap_or_else(|| "inline".into())).collect::<Vec<_>>().join(","));
        let bodies: Vec<VirtualPolytope> = docs
            .iter()
            .map(|(_, d)| Ok(VirtualPolytope::from_body(Body::Full(d.polytope()?))))
            .collect::<Result<_>>()?;
        let mults = match mult {
            Some(m) => parse_ints(m)?,
            None => vec![1; bodies.len()],
        };
        if mults.len() != bodies.len() || mults.iter().any(|&m| m < 0) {
            return Err(Error::InvalidInput("one non-negative multiplicity per polytope".into()));
        }
        let args: Vec<(VirtualPolytope, usize)> = bodies.into_iter().zip(mults.iter().map(|&m| m as usize)).collect();
        doc.put("mixed_volume", rational_json(&mixed_volume(&args)?));
        return Ok(doc);
    }

    let (name, input) = cmd.input().single()?;
    doc.input = name;
    let p = input.polytope()?;
    match cmd {
        Command::Count { k, .. } => {
            let s = ehrhart::lattice_sums(&p, *k)?;
            doc.put("count", json!(s.count));
            doc.put("interior_count", json!(ehrhart::interior_count(&p, *k)?));
            doc.put("lattice_sum", Value::Array(s.sum.iter().map(|x| json!(x.to_string())).collect()));
        }
        Command::Bck { k, .. } => {
            let bc = expansion::quantized_barycenter(&p, *k)?.value;
            let f = expansion::barycenter_function(&p)?;
            let from_function = f.eval(*k);
            doc.check("barycenter function", from_function.as_ref() == Some(&bc), None);
            compare(&mut doc, "reflexive polygon closed form", &bc, expansion::reflexive_polygon_bck(&p, *k))?;
            doc.put("Bc_k", vector_json(&bc));
        }
        Command::Bc { .. } => {
            let m = measure(&p);
            let fd = qbary::polytope::facet_data(&p)?;
            doc.put("volume", rational_json(&m.volume));
            doc.put("Bc", vector_json(&m.barycenter));
            doc.put("boundary_volume", rational_json(&fd.boundary_normalized_volume));
            doc.put("boundary_barycenter", vector_json(&fd.boundary_barycenter));
            doc.put("a1", vector_json(&expansion::a1_closed_form(&p)?));
        }
        Command::Ehrhart { .. } => {
            let e = ehrhart::ehrhart_polynomial(&p)?;
            compare(&mut doc, "reflexive closed form", &e.poly, ehrhart::reflexive_closed_form(&p).map(|c| c.poly))?;
            doc.put("coefficients", polynomial_json(&e.poly));
        }
        Command::Reciprocity { k, .. } => {
            let report = ehrhart::reciprocity_check(&p, *k)?;
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "E(-k)": rational_json(&r.at_minus_k),
                        "interior": r.interior,
                        "general": r.general,
                        "reflexive": r.reflexive,
                    })
                })
                .collect();
            doc.put("rows", Value::Array(rows));
            for r in &report.rows {
                doc.check(&format!("reciprocity k={}", r.k), r.general && r.reflexive.unwrap_or(true), None);
            }
        }
        Command::Expand { order, .. } => {
            let a = expansion::asymptotic_coefficients(&p, *order)?;
            doc.put("a", matrix_json(&a.terms));
        }
        Command::Rooftop { v, q, .. } => {
            let v = parse_ints(v)?;
            let q = q.unwrap_or_else(|| expansion::canonical_offset(&p, &v));
            let roof = expansion::rooftop(&p, &v, q)?;
            doc.put("q", json!(q));
            doc.put("vertices", lattice_json(roof.vertices()));
            doc.put("normals", lattice_json(&roof.normals()));
            doc.put("offsets", json!(roof.offsets()));
        }
        Command::Classify { .. } => {
            let c = p.classify();
            doc.put("dim", json!(p.dim()));
            doc.put("reflexive", json!(c.reflexive));
            doc.put("delzant", json!(c.delzant));
            doc.put("vertices", lattice_json(p.vertices()));
        }
        Command::Hrr { .. } => {
            let h = toricrr::hrr_coefficients(&input.toric_data()?)?;
            doc.put("coefficients", vector_json(&h.coeffs));
            doc.put("volume", rational_json(&h.top));
            doc.put("anticanonical", rational_json(&h.anticanonical));
        }
        Command::RooftopCoeffs { v, .. } => {
            let r = toricrr::rooftop_coefficients(&input.toric_data()?, &parse_ints(v)?)?;
            doc.put("q", json!(r.q));
            doc.put("c", vector_json(&r.values));
            doc.put("mixed_volume_formula", r.formula.as_deref().map_or(Value::Null, vector_json));
        }
        Command::Delta { k, .. } => {
            let t = input.toric_data()?;
            match k {
                Some(k) => {
                    let d = stability::delta_k(&t, *k)?;
                    compare(&mut doc, "del Pezzo closed form", &d.value, stability::del_pezzo_closed_form(&t, *k))?;
                    doc.put("delta_k", rational_json(&d.value));
                    doc.put("argmin", json!(d.argmin));
                }
                None => {
                    let d = stability::delta(&t)?;
                    doc.put("delta", rational_json(&d.value));
                    doc.put("argmin", json!(d.argmin));
                }
            }
        }
        Command::DeltaSeq { k, order, .. } => {
            if *k < 1 {
                return Err(Error::InvalidInput(format!("k must be positive, got {k}")));
            }
            let t = input.toric_data()?;
            let ks: Vec<i64> = (1..=*k).collect();
            let s = stability::delta_sequence(&t, &ks, *order)?;
            let values: Vec<Value> =
                s.values.iter().map(|(k, d)| json!({"k": k, "delta_k": rational_json(&d.value)})).collect();
            doc.put("values", Value::Array(values));
            doc.put("dominant", json!(s.dominant));
            doc.put("dominant_function", rational_function_json(&s.dominant_function));
            doc.put("k0", json!(s.k0));
            doc.put("asymptotics", vector_json(s.asymptotics.coeffs()));
            doc.put("first_order", rational_json(&s.first_order));
            if let Some(f) = &s.fano_first_order {
                doc.check("Fano first-order term", *f == s.first_order, None);
            }
            for (k, d) in &s.values {
                if let Ok(c) = stability::del_pezzo_closed_form(&t, *k) {
                    doc.check(&format!("del Pezzo closed form k={k}"), c == d.value, None);
                }
            }
        }
        Command::Df { v, order, .. } => {
            let v = parse_ints(v)?;
            doc.put("DF", vector_json(&expansion::df_coefficients(&p, &v, *order)?));
        }
        Command::Fan { v, .. } => {
            let v = parse_ints(v)?;
            let fan = toricrr::rooftop_fan(&input.toric_data()?, &v);
            doc.put("rays", lattice_json(&fan.rays));
            doc.put("q", json!(fan.q));
        }
        Command::MixedVolume { .. } => unreachable!(),
    }
    Ok(doc)
}

fn error_document(cmd: &str, e: &Error) -> ResultDocument {
    let mut doc = ResultDocument::new(cmd, None);
    doc.put("error", json!(e.name()));
    doc.check("run", false, Some(e.to_string()));
    doc
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; 2 is reserved for inconsistencies
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let name = cli.command.name();
    let (doc, code) = match run(&cli.command) {
        Ok(doc) => {
            let code = if doc.all_passed() { 0 } else { 2 };
            (doc, code)
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            let code = if e.is_internal() { 2 } else { 1 };
            (error_document(name, &e), code)
        }
    };
    if cli.table {
        print!("{}", table::render(&doc, cli.approx));
    } else {
        println!("{}", doc.to_json());
    }
    ExitCode::from(code)
}


#[cfg(test)]
mod tests {
    use super::*;
    use qbary::int;

    #[test]
    fn disagreeing_closed_form_fails_the_document() {
        let mut doc = ResultDocument::new("x", None);
        compare(&mut doc, "same", &int(1), Ok(int(1))).unwrap();
        assert!(doc.all_passed());
        compare(&mut doc, "skipped", &int(1), Err(Error::Unsupported("n/a".into()))).unwrap();
        assert_eq!(doc.diagnostics.len(), 1);
        compare(&mut doc, "differs", &int(1), Ok(int(2))).unwrap();
        assert!(!doc.all_passed());
        assert!(compare(&mut doc, "broken", &int(1), Err(Error::InternalInconsistency("x".into()))).is_err());
    }

    #[test]
    fn inline_lists() {
        assert_eq!(parse_rows("1,0; 0,1;-1,-1").unwrap(), vec![vec![1, 0], vec![0, 1], vec![-1, -1]]);
        assert!(parse_ints("1,x").is_err());
    }
}
