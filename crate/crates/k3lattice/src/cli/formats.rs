//! Bit-exact JSON file formats. All integers and rationals are decimal
//! strings (`"p"` or `"p/q"`) so arbitrary precision survives the round
//! trip; canonical emission is pretty-printed with sorted struct fields, and
//! `parse ∘ emit` is the identity on canonical files.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::curvesing::{HomogeneousCurve, ProjPoint};
use crate::exactmat::IntMatrix;
use crate::fibrations::FiberConfiguration;
use crate::lattice::{catalog_sum, CatalogName, Embedding, Lattice};

/// A schema violation with the JSON-path of the offending value.
#[derive(Debug, Clone)]
pub struct FormatError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.path, self.message)
    }
}

impl std::error::Error for FormatError {}

fn err(path: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError { path: path.into(), message: message.into() }
}

fn syntax_error(e: serde_json::Error) -> FormatError {
    err("$", format!("line {} column {}: {}", e.line(), e.column(), e))
}

pub fn parse_bigint(s: &str, path: &str) -> Result<BigInt, FormatError> {
    BigInt::from_str(s.trim()).map_err(|_| err(path, format!("`{s}` is not a decimal integer")))
}

pub fn parse_rational(s: &str, path: &str) -> Result<BigRational, FormatError> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRational::from(parse_bigint(s, path)?)),
        Some((num, den)) => {
            let n = parse_bigint(num, path)?;
            let d = parse_bigint(den, path)?;
            if d.is_zero() {
                return Err(err(path, "zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

// ---------------------------------------------------------------------------
// documents
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub gram: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingDoc {
    pub ambient: LatticeDoc,
    /// Rows of the basis matrix; the columns are the sublattice basis
    /// vectors in ambient coordinates.
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveTermDoc {
    pub exp: [u32; 3],
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveDoc {
    pub degree: u32,
    pub terms: Vec<CurveTermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub fibers: Vec<String>,
}

fn matrix_from_rows(rows: &[Vec<String>], path: &str) -> Result<IntMatrix, FormatError> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    let mut data = Vec::with_capacity(r * c);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != c {
            return Err(err(format!("{path}[{i}]"), format!("expected {c} entries, found {}", row.len())));
        }
        for (j, s) in row.iter().enumerate() {
            data.push(parse_bigint(s, &format!("{path}[{i}][{j}]"))?);
        }
    }
    IntMatrix::new(r, c, data).map_err(|e| err(path, e.to_string()))
}

fn matrix_to_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.at(i, j).to_string()).collect()).collect()
}

pub fn lattice_from_doc(doc: &LatticeDoc) -> Result<Lattice, FormatError> {
    let gram = matrix_from_rows(&doc.gram, "gram")?;
    if gram.rows() != gram.cols() {
        return Err(err("gram", format!("matrix is {}x{}, not square", gram.rows(), gram.cols())));
    }
    if let Some((r, c)) = gram.symmetry_defect() {
        return Err(err(
            format!("gram[{r}][{c}]"),
            format!("entry differs from gram[{c}][{r}]: not symmetric"),
        ));
    }
    let l = Lattice::new(gram).map_err(|e| err("gram", e.to_string()))?;
    Ok(match &doc.label {
        Some(label) => {
            let mut l = l;
            l.set_label(label.clone());
            l
        }
        None => l,
    })
}

pub fn lattice_to_doc(l: &Lattice) -> LatticeDoc {
    LatticeDoc { label: l.label().map(str::to_string), gram: matrix_to_rows(l.gram()) }
}

pub fn embedding_from_doc(doc: &EmbeddingDoc) -> Result<Embedding, FormatError> {
    let ambient = lattice_from_doc(&doc.ambient)?;
    let basis = matrix_from_rows(&doc.basis, "basis")?;
    Embedding::new(ambient, basis).map_err(|e| err("basis", e.to_string()))
}

pub fn embedding_to_doc(e: &Embedding) -> EmbeddingDoc {
    EmbeddingDoc { ambient: lattice_to_doc(e.ambient()), basis: matrix_to_rows(e.basis()) }
}

pub fn curve_from_doc(doc: &CurveDoc) -> Result<HomogeneousCurve, FormatError> {
    let mut terms: BTreeMap<[u32; 3], BigRational> = BTreeMap::new();
    for (k, t) in doc.terms.iter().enumerate() {
        let path = format!("terms[{k}]");
        if t.exp[0] + t.exp[1] + t.exp[2] != doc.degree {
            return Err(err(
                format!("{path}.exp"),
                format!("exponents sum to {}, expected degree {}", t.exp[0] + t.exp[1] + t.exp[2], doc.degree),
            ));
        }
        let coeff = parse_rational(&t.coeff, &format!("{path}.coeff"))?;
        if coeff.is_zero() {
            return Err(err(format!("{path}.coeff"), "zero coefficient"));
        }
        if terms.insert(t.exp, coeff).is_some() {
            return Err(err(format!("{path}.exp"), "duplicate exponent triple"));
        }
    }
    HomogeneousCurve::new(doc.degree, terms).map_err(|e| err("terms", e.to_string()))
}

pub fn curve_to_doc(f: &HomogeneousCurve) -> CurveDoc {
    CurveDoc {
        degree: f.degree(),
        terms: f
            .terms()
            .map(|(e, c)| CurveTermDoc { exp: *e, coeff: rational_string(c) })
            .collect(),
    }
}

pub fn config_from_doc(doc: &ConfigDoc) -> Result<FiberConfiguration, FormatError> {
    let mut fibers = Vec::new();
    for (i, tag) in doc.fibers.iter().enumerate() {
        fibers.push(tag.parse().map_err(|e| err(format!("fibers[{i}]"), format!("{e}")))?);
    }
    FiberConfiguration::new(fibers).map_err(|e| err("fibers", e.to_string()))
}

pub fn config_to_doc(cfg: &FiberConfiguration) -> ConfigDoc {
    ConfigDoc { fibers: cfg.fibers().iter().map(|f| f.to_string()).collect() }
}

// ---------------------------------------------------------------------------
// canonical (de)serialization
// ---------------------------------------------------------------------------

pub fn emit<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents are serializable");
    s.push('\n');
    s
}

pub fn parse_lattice(text: &str) -> Result<Lattice, FormatError> {
    let doc: LatticeDoc = serde_json::from_str(text).map_err(syntax_error)?;
    lattice_from_doc(&doc)
}

pub fn parse_embedding(text: &str) -> Result<Embedding, FormatError> {
    let doc: EmbeddingDoc = serde_json::from_str(text).map_err(syntax_error)?;
    embedding_from_doc(&doc)
}

pub fn parse_curve(text: &str) -> Result<HomogeneousCurve, FormatError> {
    let doc: CurveDoc = serde_json::from_str(text).map_err(syntax_error)?;
    curve_from_doc(&doc)
}

pub fn parse_config(text: &str) -> Result<FiberConfiguration, FormatError> {
    let doc: ConfigDoc = serde_json::from_str(text).map_err(syntax_error)?;
    config_from_doc(&doc)
}

// ---------------------------------------------------------------------------
// command-line literals
// ---------------------------------------------------------------------------

/// A lattice argument: a path to a lattice JSON file, or a `+`-separated sum
/// of catalog names such as `U+A5+A5+A5`.
pub fn lattice_from_spec(spec: &str) -> Result<Lattice, FormatError> {
    if std::path::Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| err("$", format!("cannot read {spec}: {e}")))?;
        return parse_lattice(&text);
    }
    let names: Vec<CatalogName> = spec
        .split('+')
        .map(|part| part.trim().parse::<CatalogName>())
        .collect::<Result<_, _>>()
        .map_err(|e| err("$", format!("`{spec}` is neither a file nor a catalog sum: {e}")))?;
    catalog_sum(&names).map_err(|e| err("$", e.to_string()))
}

/// A curve argument: a path to a curve JSON file, or one of `C3 | C4 | C7 |
/// Dmu:<p/q>`.
pub fn curve_from_spec(spec: &str) -> Result<HomogeneousCurve, FormatError> {
    use crate::curvesing::{curve_catalog, CatalogCurve};
    let named = match spec {
        "C3" => Some(CatalogCurve::C3),
        "C4" => Some(CatalogCurve::C4),
        "C7" => Some(CatalogCurve::C7),
        _ => spec
            .strip_prefix("Dmu:")
            .map(|mu| parse_rational(mu, "$").map(CatalogCurve::Dmu))
            .transpose()?,
    };
    if let Some(c) = named {
        return curve_catalog(&c).map_err(|e| err("$", e.to_string()));
    }
    if std::path::Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| err("$", format!("cannot read {spec}: {e}")))?;
        return parse_curve(&text);
    }
    Err(err("$", format!("`{spec}` is neither a catalog curve nor a file")))
}

/// A comma-separated rational point `x,y,z`.
pub fn point_from_spec(spec: &str) -> Result<ProjPoint, FormatError> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(err("$", format!("`{spec}` is not a point: expected x,y,z")));
    }
    let coords = [
        parse_rational(parts[0], "$[0]")?,
        parse_rational(parts[1], "$[1]")?,
        parse_rational(parts[2], "$[2]")?,
    ];
    ProjPoint::new(coords).map_err(|e| err("$", e.to_string()))
}

/// A comma-separated integer vector.
pub fn vector_from_spec(spec: &str) -> Result<Vec<BigInt>, FormatError> {
    spec.split(',')
        .enumerate()
        .map(|(i, s)| parse_bigint(s, &format!("$[{i}]")))
        .collect()
}
