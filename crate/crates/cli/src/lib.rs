//! Command implementations for the `qserre` binary. Every command builds its
//! whole output in memory; nothing is printed until it has succeeded.

pub mod args;

use std::collections::BTreeMap;
use std::fs;

use anyhow::{bail, Context, Result};
use num::BigRational;
use serde::Serialize;

use qserre::braided::{braided_factorial, GramOracle};
use qserre::freealg::{convolution, counit, parse_poly, FreePoly, SkewPairing};
use qserre::linalg::{left_nullspace, rank, right_nullspace, Matrix};
use qserre::rmatrix::{
    catalog, check_braid, check_ybe, flip, BraidMatrix, CatalogName, CheckOutcome, RMatrix, RMatrixDocument,
    Witness,
};
use qserre::scalars::{parse_rational, parse_scalar, Scalar};
use qserre::serre::{kernel_relators, new_relators_from_kernel, tu_null_gram_with, Relator, RelatorRecord, RelatorSide};

use args::{Cli, Command, CommonArgs, FactorialArgs, Format, OutputArgs, PairArgs, SerreArgs, SourceArgs};

/// Above this many basis vectors of `V^{⊗N}` a warning is printed.
pub const LARGE_TENSOR: usize = 1024;

#[derive(Debug)]
pub struct Output {
    pub body: String,
    /// 0 when every check passed, 1 otherwise
    pub code: u8,
    pub warnings: Vec<String>,
}

impl Output {
    fn ok(body: String) -> Self {
        Output {
            body,
            code: 0,
            warnings: Vec::new(),
        }
    }
}

/// Runs a command. `Err` means invalid input (exit code 2).
pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Braid(a) => cmd_braid(a),
        Command::Factorial(a) => cmd_factorial(a),
        Command::Serre(a) => cmd_serre(a),
        Command::Pair(a) => cmd_pair(a),
        Command::Catalog(a) => cmd_catalog(a),
    }
}

/// The output destination of a command.
pub fn output_args(cli: &Cli) -> &OutputArgs {
    match &cli.command {
        Command::Check(a) | Command::Braid(a) => &a.output,
        Command::Factorial(a) => &a.common.output,
        Command::Serre(a) => &a.common.output,
        Command::Pair(a) => &a.common.output,
        Command::Catalog(a) => a,
    }
}

#[derive(Debug, Clone, Serialize)]
struct SourceDoc {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    params: Vec<String>,
    rmatrix: RMatrixDocument,
}

struct Loaded {
    label: String,
    dim: usize,
    matrix: Matrix<Scalar>,
    doc: SourceDoc,
}

fn load_raw(src: &SourceArgs) -> Result<Loaded> {
    if let Some(name) = &src.catalog {
        let params = src
            .params
            .iter()
            .map(|p| parse_scalar(p).with_context(|| format!("parameter '{p}'")))
            .collect::<Result<Vec<_>>>()?;
        if !params.is_empty() && name != "diagonal" {
            bail!("--param only applies to the diagonal catalog entry");
        }
        let entry = CatalogName::from_parts(name, params)?;
        let r = catalog(&entry, src.n)?;
        let n = r.dim();
        Ok(Loaded {
            label: format!("catalog {name}, n = {n}"),
            dim: n,
            matrix: r.matrix().clone(),
            doc: SourceDoc {
                kind: "catalog",
                name: Some(name.clone()),
                path: None,
                params: src.params.clone(),
                rmatrix: RMatrixDocument::from_rmatrix(&r),
            },
        })
    } else if let Some(path) = &src.input {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let doc = RMatrixDocument::parse(&text).with_context(|| format!("in {}", path.display()))?;
        let matrix = doc.to_matrix().with_context(|| format!("in {}", path.display()))?;
        let n = doc.dim;
        Ok(Loaded {
            label: format!("file {}, n = {n}", path.display()),
            dim: n,
            doc: SourceDoc {
                kind: "file",
                name: None,
                path: Some(path.display().to_string()),
                params: Vec::new(),
                rmatrix: RMatrixDocument::from_matrix(n, &matrix),
            },
            matrix,
        })
    } else {
        bail!("one of --catalog or --input is required");
    }
}

fn load_valid(src: &SourceArgs) -> Result<(Loaded, RMatrix<Scalar>)> {
    let loaded = load_raw(src)?;
    let r = RMatrix::new(loaded.matrix.clone()).context("invalid R-matrix")?;
    Ok((loaded, r))
}

fn at_q(common: &CommonArgs) -> Result<Option<BigRational>> {
    common
        .at_q
        .as_deref()
        .map(|t| parse_rational(t).with_context(|| format!("--at-q value '{t}'")))
        .transpose()
}

fn show(s: &Scalar, q0: Option<&BigRational>) -> Result<String> {
    Ok(match q0 {
        None => s.to_string(),
        Some(q0) => s.evaluate_at(q0)?.to_string(),
    })
}

fn matrix_cells(m: &Matrix<Scalar>, q0: Option<&BigRational>) -> Result<Vec<Vec<String>>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|v| show(v, q0)).collect())
        .collect()
}

fn matrix_text(cells: &[Vec<String>], indent: &str) -> String {
    let cols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        out.push_str(indent);
        out.push('[');
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{cell:>w$}", w = widths[c]));
        }
        out.push_str("]\n");
    }
    out
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<&'a SourceDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    at_q: Option<String>,
    results: T,
}

fn document<T: Serialize>(command: &'static str, input: Option<&SourceDoc>, q0: Option<&BigRational>, results: T) -> String {
    let doc = Document {
        tool: "qserre",
        version: env!("CARGO_PKG_VERSION"),
        command,
        input,
        at_q: q0.map(ToString::to_string),
        results,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("documents serialize");
    s.push('\n');
    s
}

fn braid_of(r: &RMatrix<Scalar>) -> Result<BraidMatrix<Scalar>> {
    r.braid().context("braid matrix")
}

fn warn_large(n: usize, degree: usize, warnings: &mut Vec<String>) {
    let size = n.checked_pow(degree as u32).unwrap_or(usize::MAX);
    if size > LARGE_TENSOR {
        warnings.push(format!(
            "V^{{⊗{degree}}} has dimension {size} > {LARGE_TENSOR}; exact elimination may be very slow"
        ));
    }
}

// check

#[derive(Serialize)]
struct CheckDoc {
    ybe: CheckRecord,
    invertible: bool,
    braid: CheckRecord,
}

#[derive(Serialize)]
struct CheckRecord {
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
}

impl From<CheckOutcome> for CheckRecord {
    fn from(c: CheckOutcome) -> Self {
        match c {
            CheckOutcome::Pass => CheckRecord {
                pass: true,
                witness: None,
            },
            CheckOutcome::Fail(w) => CheckRecord {
                pass: false,
                witness: Some(w),
            },
        }
    }
}

fn verdict(c: &CheckRecord) -> String {
    match &c.witness {
        None => "pass".into(),
        Some(w) => format!("fail at {w}"),
    }
}

fn cmd_check(a: &CommonArgs) -> Result<Output> {
    let loaded = load_raw(&a.source)?;
    let m = &loaded.matrix;
    let ybe: CheckRecord = check_ybe(m)?.into();
    let invertible = rank(m) == m.rows();
    let b = flip::<Scalar>(loaded.dim).matmul(m)?;
    let braid: CheckRecord = check_braid(&b)?.into();
    let code = u8::from(!(ybe.pass && invertible && braid.pass));
    let body = match a.output.format {
        Format::Text => format!(
            "R-matrix: {}\nYang-Baxter equation: {}\ninvertible: {}\nbraid relation: {}\n",
            loaded.label,
            verdict(&ybe),
            if invertible { "yes" } else { "no" },
            verdict(&braid)
        ),
        Format::Doc => document(
            "check",
            Some(&loaded.doc),
            None,
            CheckDoc {
                ybe,
                invertible,
                braid,
            },
        ),
    };
    Ok(Output {
        body,
        code,
        warnings: Vec::new(),
    })
}

// braid

#[derive(Serialize)]
struct BraidDoc {
    braid: Vec<Vec<String>>,
}

fn cmd_braid(a: &CommonArgs) -> Result<Output> {
    let q0 = at_q(a)?;
    let (loaded, r) = load_valid(&a.source)?;
    let b = braid_of(&r)?;
    let cells = matrix_cells(b.matrix(), q0.as_ref())?;
    let body = match a.output.format {
        Format::Text => format!(
            "R-matrix: {}\nB = P·R ({n2} x {n2})\n{}",
            loaded.label,
            matrix_text(&cells, ""),
            n2 = loaded.dim * loaded.dim
        ),
        Format::Doc => document("braid", Some(&loaded.doc), q0.as_ref(), BraidDoc { braid: cells }),
    };
    Ok(Output::ok(body))
}

// factorial

#[derive(Serialize)]
struct FactorialDoc {
    factorials: Vec<FactorialRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<VerifyRecord>,
}

#[derive(Serialize)]
struct FactorialRecord {
    degree: usize,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct VerifyRecord {
    matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_mismatch: Option<Mismatch>,
}

#[derive(Serialize)]
struct Mismatch {
    degree: usize,
    row: usize,
    col: usize,
}

fn cmd_factorial(a: &FactorialArgs) -> Result<Output> {
    if a.degree < 1 {
        bail!("--N must be at least 1");
    }
    let q0 = at_q(&a.common)?;
    let (loaded, r) = load_valid(&a.common.source)?;
    let b = braid_of(&r)?;
    let mut warnings = Vec::new();
    warn_large(loaded.dim, a.degree, &mut warnings);

    let mut factorials = Vec::new();
    let mut raw = Vec::new();
    for k in 1..=a.degree {
        let f = braided_factorial(&b, k);
        factorials.push(FactorialRecord {
            degree: k,
            matrix: matrix_cells(&f.matrix, q0.as_ref())?,
        });
        raw.push(f.matrix);
    }
    let verify = a.verify.then(|| {
        let oracle = GramOracle::new(&b);
        let first_mismatch = raw.iter().enumerate().find_map(|(i, m)| {
            m.first_difference(&oracle.gram(i + 1))
                .map(|(row, col)| Mismatch { degree: i + 1, row, col })
        });
        VerifyRecord {
            matches: first_mismatch.is_none(),
            first_mismatch,
        }
    });
    let code = u8::from(verify.as_ref().is_some_and(|v| !v.matches));

    let body = match a.common.output.format {
        Format::Text => {
            let mut s = format!("R-matrix: {}\n", loaded.label);
            for f in &factorials {
                let size = f.matrix.len();
                s.push_str(&format!("[{}!]_B ({size} x {size})\n", f.degree));
                s.push_str(&matrix_text(&f.matrix, "  "));
            }
            if let Some(v) = &verify {
                match &v.first_mismatch {
                    None => s.push_str("oracle match\n"),
                    Some(m) => s.push_str(&format!(
                        "oracle mismatch at degree {}, row {}, column {}\n",
                        m.degree, m.row, m.col
                    )),
                }
            }
            s
        }
        Format::Doc => document(
            "factorial",
            Some(&loaded.doc),
            q0.as_ref(),
            FactorialDoc { factorials, verify },
        ),
    };
    Ok(Output { body, code, warnings })
}

// serre

#[derive(Serialize)]
struct SerreDoc {
    degrees: Vec<DegreeRecord>,
    tu_gram: Vec<GramRecord>,
}

#[derive(Serialize)]
struct DegreeRecord {
    degree: usize,
    e_kernel: Vec<RelatorRecord>,
    f_kernel: Vec<RelatorRecord>,
    new_e: Vec<RelatorRecord>,
    new_f: Vec<RelatorRecord>,
}

#[derive(Serialize)]
struct GramRecord {
    degree: usize,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    left_kernel_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    right_kernel_dim: Option<usize>,
    skipped: bool,
}

fn records(rels: &[Relator<Scalar>], q0: Option<&BigRational>) -> Result<Vec<RelatorRecord>> {
    rels.iter()
        .map(|rel| {
            let Some(q0) = q0 else {
                return Ok(rel.to_record());
            };
            let coefficients = rel
                .coefficients
                .iter()
                .map(|c| Ok(Scalar::from_rational(c.evaluate_at(q0)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Relator { coefficients, ..rel.clone() }.to_record())
        })
        .collect()
}

fn relator_block(s: &mut String, title: &str, recs: &[RelatorRecord]) {
    s.push_str(&format!("  {title}: {}\n", recs.len()));
    for r in recs {
        s.push_str(&format!("    {}\n", r.rendering));
    }
}

fn cmd_serre(a: &SerreArgs) -> Result<Output> {
    if a.degree < 2 {
        bail!("--N must be at least 2 for serre");
    }
    let q0 = at_q(&a.common)?;
    let (loaded, r) = load_valid(&a.common.source)?;
    let n = loaded.dim;
    let b = braid_of(&r)?;
    let mut warnings = Vec::new();
    warn_large(n, a.degree, &mut warnings);

    let mut lower_e = BTreeMap::new();
    let mut lower_f = BTreeMap::new();
    let mut degrees = Vec::new();
    for d in 2..=a.degree {
        let fact = braided_factorial(&b, d);
        let ek = kernel_relators(&fact, RelatorSide::E);
        let fk = kernel_relators(&fact, RelatorSide::F);
        let new_e = new_relators_from_kernel(&ek, n, d, RelatorSide::E, &lower_e)?;
        let new_f = new_relators_from_kernel(&fk, n, d, RelatorSide::F, &lower_f)?;
        lower_e.insert(d, ek.iter().map(|k| k.coefficients.clone()).collect());
        lower_f.insert(d, fk.iter().map(|k| k.coefficients.clone()).collect());
        degrees.push(DegreeRecord {
            degree: d,
            e_kernel: records(&ek, q0.as_ref())?,
            f_kernel: records(&fk, q0.as_ref())?,
            new_e: records(&new_e, q0.as_ref())?,
            new_f: records(&new_f, q0.as_ref())?,
        });
    }

    let pairing = SkewPairing::new(&r);
    let mut tu_gram = Vec::new();
    for d in 1..=a.degree {
        let size = n.checked_pow(2 * d as u32).unwrap_or(usize::MAX);
        if size > a.tu_max_size {
            tu_gram.push(GramRecord {
                degree: d,
                size,
                left_kernel_dim: None,
                right_kernel_dim: None,
                skipped: true,
            });
            continue;
        }
        let g = tu_null_gram_with(&pairing, d);
        tu_gram.push(GramRecord {
            degree: d,
            size,
            left_kernel_dim: Some(left_nullspace(&g).len()),
            right_kernel_dim: Some(right_nullspace(&g).len()),
            skipped: false,
        });
    }

    let body = match a.common.output.format {
        Format::Text => {
            let mut s = format!("R-matrix: {}\n", loaded.label);
            for deg in &degrees {
                s.push_str(&format!("degree {}\n", deg.degree));
                relator_block(&mut s, "E kernel", &deg.e_kernel);
                relator_block(&mut s, "F kernel", &deg.f_kernel);
                relator_block(&mut s, "new E relators", &deg.new_e);
                relator_block(&mut s, "new F relators", &deg.new_f);
            }
            s.push_str("T-U Gram kernels (u-words x t-words)\n");
            for g in &tu_gram {
                match (g.left_kernel_dim, g.right_kernel_dim) {
                    (Some(l), Some(rk)) => s.push_str(&format!(
                        "  degree {}: {size} x {size}, left {l}, right {rk}\n",
                        g.degree,
                        size = g.size
                    )),
                    _ => s.push_str(&format!(
                        "  degree {}: {size} x {size}, skipped (above --tu-max-size {})\n",
                        g.degree,
                        a.tu_max_size,
                        size = g.size
                    )),
                }
            }
            s
        }
        Format::Doc => document(
            "serre",
            Some(&loaded.doc),
            q0.as_ref(),
            SerreDoc { degrees, tu_gram },
        ),
    };
    Ok(Output { body, code: 0, warnings })
}

// pair

#[derive(Serialize)]
struct PairDoc {
    x: String,
    a: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    convolution: Option<ConvolutionRecord>,
}

#[derive(Serialize)]
struct ConvolutionRecord {
    pass: bool,
    expected: String,
    inverse_first: String,
    direct_first: String,
}

fn convolution_poly(
    direct: &SkewPairing<Scalar>,
    inverse: &SkewPairing<Scalar>,
    x: &FreePoly<Scalar>,
    a: &FreePoly<Scalar>,
) -> Result<(Scalar, Scalar, Scalar)> {
    let mut expected = Scalar::from_int(0);
    let mut inv_first = Scalar::from_int(0);
    let mut dir_first = Scalar::from_int(0);
    for (xm, xc) in x.terms() {
        for (am, ac) in a.terms() {
            let c = xc * ac;
            expected = expected + &(counit::<Scalar>(xm) * &counit::<Scalar>(am) * &c);
            inv_first = inv_first + &(convolution(direct, inverse, xm, am, true)? * &c);
            dir_first = dir_first + &(convolution(direct, inverse, xm, am, false)? * &c);
        }
    }
    Ok((expected, inv_first, dir_first))
}

fn cmd_pair(a: &PairArgs) -> Result<Output> {
    let q0 = at_q(&a.common)?;
    let (loaded, r) = load_valid(&a.common.source)?;
    let x = parse_poly(&a.x).with_context(|| format!("plus expression '{}'", a.x))?;
    let y = parse_poly(&a.a).with_context(|| format!("minus expression '{}'", a.a))?;
    let direct = SkewPairing::new(&r);
    let value = direct.pair_poly(&x, &y)?;
    let inverse_pairing = (a.inverse || a.convolution).then(|| SkewPairing::inverse(&r));
    let inverse = match (&inverse_pairing, a.inverse) {
        (Some(p), true) => Some(show(&p.pair_poly(&x, &y)?, q0.as_ref())?),
        _ => None,
    };
    let conv = match (&inverse_pairing, a.convolution) {
        (Some(p), true) => {
            let (expected, inv_first, dir_first) = convolution_poly(&direct, p, &x, &y)?;
            Some(ConvolutionRecord {
                pass: inv_first == expected && dir_first == expected,
                expected: expected.to_string(),
                inverse_first: inv_first.to_string(),
                direct_first: dir_first.to_string(),
            })
        }
        _ => None,
    };
    let code = u8::from(conv.as_ref().is_some_and(|c| !c.pass));
    let doc = PairDoc {
        x: x.to_string(),
        a: y.to_string(),
        value: show(&value, q0.as_ref())?,
        inverse,
        convolution: conv,
    };
    let body = match a.common.output.format {
        Format::Text => {
            let mut s = format!("<{}, {}> = {}\n", doc.x, doc.a, doc.value);
            if let Some(v) = &doc.inverse {
                s.push_str(&format!("<{}, {}>^- = {v}\n", doc.x, doc.a));
            }
            if let Some(c) = &doc.convolution {
                if c.pass {
                    s.push_str(&format!("convolution: pass (both orders = {})\n", c.expected));
                } else {
                    s.push_str(&format!(
                        "convolution: fail (expected {}, inverse first {}, direct first {})\n",
                        c.expected, c.inverse_first, c.direct_first
                    ));
                }
            }
            s
        }
        Format::Doc => document("pair", Some(&loaded.doc), q0.as_ref(), doc),
    };
    Ok(Output { body, code, warnings: Vec::new() })
}

// catalog

#[derive(Serialize)]
struct CatalogEntry {
    name: &'static str,
    description: &'static str,
}

fn cmd_catalog(a: &OutputArgs) -> Result<Output> {
    let entries: Vec<CatalogEntry> = CatalogName::NAMES
        .iter()
        .map(|name| CatalogEntry {
            name,
            description: CatalogName::describe(name),
        })
        .collect();
    let body = match a.format {
        Format::Text => entries
            .iter()
            .map(|e| format!("{:<18} {}\n", e.name, e.description))
            .collect(),
        Format::Doc => document("catalog", None, None, entries),
    };
    Ok(Output::ok(body))
}
