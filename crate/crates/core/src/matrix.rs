//! Coxeter matrices, the metric `D`, the entrywise partial order and the
//! family builders (deformations, polygons, contractible edges).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible finite label (exclusive).
pub const LABEL_LIMIT: u32 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatrixError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("matrix is not symmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },
    #[error("conflicting values given for entry ({i}, {j})")]
    Conflict { i: usize, j: usize },
    #[error("diagonal entry ({i}, {i}) must be 1, found {label}")]
    BadDiagonal { i: usize, label: CoxLabel },
    #[error("off-diagonal entry ({i}, {j}) must be at least 2, found {label}")]
    OffDiagonalTooSmall { i: usize, j: usize, label: String },
    #[error("label {0} is out of range")]
    LabelOutOfRange(u64),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("deformation parameter must be at least 2, got {0}")]
    DeformParameter(u32),
    #[error("a polygon needs at least 3 angles, got {0}")]
    PolygonTooSmall(usize),
    #[error("polygon angle label at position {0} must be at least 2")]
    PolygonLabel(usize),
    #[error("edge type <{0}> is not contractible (incident labels must all be 2)")]
    NotContractible(String),
    #[error("edge label {label} is below the family bound {bound}")]
    EdgeLabelBelowBound { label: CoxLabel, bound: CoxLabel },
    #[error("invalid JSON matrix: {0}")]
    Json(String),
}

/// An entry of a Coxeter matrix: a positive integer or `∞`.
///
/// `Finite(1)` only ever appears on the diagonal of a valid matrix. The
/// derived order puts `Infinity` above every finite label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxLabel {
    Finite(u32),
    Infinity,
}

impl CoxLabel {
    pub const ONE: CoxLabel = CoxLabel::Finite(1);
    pub const TWO: CoxLabel = CoxLabel::Finite(2);

    /// A finite label, checked against `[1, 2^31)`.
    pub fn finite(m: u64) -> Result<Self, MatrixError> {
        if m == 0 || m >= LABEL_LIMIT as u64 {
            return Err(MatrixError::LabelOutOfRange(m));
        }
        Ok(CoxLabel::Finite(m as u32))
    }

    pub fn value(self) -> Option<u32> {
        match self {
            CoxLabel::Finite(m) => Some(m),
            CoxLabel::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, CoxLabel::Infinity)
    }

    /// `e^{-m}`, with `e^{-∞} = 0`.
    pub fn exp_neg(self) -> f64 {
        match self {
            CoxLabel::Finite(m) => (-(m as f64)).exp(),
            CoxLabel::Infinity => 0.0,
        }
    }

    /// `cos(π/m)`, with `cos(π/∞) = 1`. Exact at `m = 1, 2, 3`.
    pub fn cos_pi_over(self) -> f64 {
        match self {
            CoxLabel::Finite(1) => -1.0,
            CoxLabel::Finite(2) => 0.0,
            CoxLabel::Finite(3) => 0.5,
            CoxLabel::Finite(m) => (std::f64::consts::PI / m as f64).cos(),
            CoxLabel::Infinity => 1.0,
        }
    }

    /// True when the pair is joined in the Coxeter diagram (`m ≥ 3` or `∞`).
    pub fn is_diagram_edge(self) -> bool {
        match self {
            CoxLabel::Finite(m) => m >= 3,
            CoxLabel::Infinity => true,
        }
    }
}

impl fmt::Display for CoxLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxLabel::Finite(m) => write!(f, "{m}"),
            CoxLabel::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for CoxLabel {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(CoxLabel::Infinity);
        }
        let m: u64 = t.parse().map_err(|_| MatrixError::Syntax {
            line: 0,
            column: 0,
            message: format!("invalid label {t:?}"),
        })?;
        CoxLabel::finite(m)
    }
}

impl From<u32> for CoxLabel {
    fn from(m: u32) -> Self {
        CoxLabel::Finite(m)
    }
}

/// A symmetric matrix over `{1, 2, …, ∞}` with ones exactly on the diagonal.
///
/// Indices in this API are 0-based; the text and JSON formats are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<CoxLabel>,
}

impl CoxeterMatrix {
    /// The rank-`n` matrix whose off-diagonal entries are all 2.
    pub fn new(rank: usize) -> Result<Self, MatrixError> {
        Self::uniform(rank, CoxLabel::TWO)
    }

    /// All off-diagonal entries equal to `label`.
    pub fn uniform(rank: usize, label: CoxLabel) -> Result<Self, MatrixError> {
        if rank == 0 {
            return Err(MatrixError::ZeroRank);
        }
        if label < CoxLabel::TWO && rank > 1 {
            return Err(MatrixError::OffDiagonalTooSmall {
                i: 0,
                j: 1,
                label: label.to_string(),
            });
        }
        let mut entries = vec![label; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = CoxLabel::ONE;
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    /// The dihedral system `I_2(m)` of rank 2.
    pub fn dihedral(m: CoxLabel) -> Result<Self, MatrixError> {
        Self::new(2)?.with(0, 1, m)
    }

    pub fn from_rows(rows: &[Vec<CoxLabel>]) -> Result<Self, MatrixError> {
        let rank = rows.len();
        if rank == 0 {
            return Err(MatrixError::ZeroRank);
        }
        let mut entries = Vec::with_capacity(rank * rank);
        for row in rows {
            if row.len() != rank {
                return Err(MatrixError::RankMismatch {
                    left: rank,
                    right: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        let m = CoxeterMatrix { rank, entries };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), MatrixError> {
        for i in 0..self.rank {
            let d = self.get(i, i);
            if d != CoxLabel::ONE {
                return Err(MatrixError::BadDiagonal { i: i + 1, label: d });
            }
            for j in 0..self.rank {
                if i == j {
                    continue;
                }
                let a = self.get(i, j);
                if a != self.get(j, i) {
                    return Err(MatrixError::Asymmetric { i: i + 1, j: j + 1 });
                }
                if a < CoxLabel::TWO {
                    return Err(MatrixError::OffDiagonalTooSmall {
                        i: i + 1,
                        j: j + 1,
                        label: a.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> CoxLabel {
        self.entries[i * self.rank + j]
    }

    /// Returns a copy with the symmetric pair `(i, j)` set to `label`.
    pub fn with(mut self, i: usize, j: usize, label: CoxLabel) -> Result<Self, MatrixError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            if label != CoxLabel::ONE {
                return Err(MatrixError::BadDiagonal { i: i + 1, label });
            }
            return Ok(self);
        }
        if label < CoxLabel::TWO {
            return Err(MatrixError::OffDiagonalTooSmall {
                i: i + 1,
                j: j + 1,
                label: label.to_string(),
            });
        }
        let n = self.rank;
        self.entries[i * n + j] = label;
        self.entries[j * n + i] = label;
        Ok(self)
    }

    fn check_index(&self, index: usize) -> Result<(), MatrixError> {
        if index >= self.rank {
            Err(MatrixError::IndexOutOfRange {
                index,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Off-diagonal pairs `i < j` in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, CoxLabel)> + '_ {
        let n = self.rank;
        (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j, self.get(i, j))))
    }

    pub fn has_infinity(&self) -> bool {
        self.entries.iter().any(|e| e.is_infinite())
    }

    fn check_rank(&self, other: &CoxeterMatrix) -> Result<(), MatrixError> {
        if self.rank != other.rank {
            Err(MatrixError::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        } else {
            Ok(())
        }
    }

    /// `D(M, M') = max_ij |e^{-m_ij} - e^{-m'_ij}|`.
    pub fn distance(&self, other: &CoxeterMatrix) -> Result<f64, MatrixError> {
        self.check_rank(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a.exp_neg() - b.exp_neg()).abs())
            .fold(0.0, f64::max))
    }

    /// Entrywise `m_ij ≤ m'_ij` with `∞` maximal.
    pub fn precedes(&self, other: &CoxeterMatrix) -> Result<bool, MatrixError> {
        self.check_rank(other)?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    /// `M(l)`: every `∞` entry replaced by `l`, finite entries kept.
    pub fn deform(&self, l: u32) -> Result<Self, MatrixError> {
        if l < 2 {
            return Err(MatrixError::DeformParameter(l));
        }
        let label = CoxLabel::finite(l as u64)?;
        let entries = self
            .entries
            .iter()
            .map(|&e| if e.is_infinite() { label } else { e })
            .collect();
        Ok(CoxeterMatrix {
            rank: self.rank,
            entries,
        })
    }

    /// Matrix of the reflection group of a Coxeter polygon with interior
    /// angles `π/a_1, …, π/a_n`: `m_{i,i+1} = a_i` cyclically, every
    /// non-adjacent pair of sides `∞`.
    pub fn polygon(angles: &[CoxLabel]) -> Result<Self, MatrixError> {
        let n = angles.len();
        if n < 3 {
            return Err(MatrixError::PolygonTooSmall(n));
        }
        if let Some(pos) = angles.iter().position(|&a| a < CoxLabel::TWO) {
            return Err(MatrixError::PolygonLabel(pos + 1));
        }
        let mut m = Self::uniform(n, CoxLabel::Infinity)?;
        for (i, &a) in angles.iter().enumerate() {
            m = m.with(i, (i + 1) % n, a)?;
        }
        Ok(m)
    }

    /// Member of a contractible-edge family: the entry at `spec.pair`
    /// replaced by `label`. `label = ∞` gives the contracted limit.
    pub fn edge_family(
        &self,
        spec: &ContractibleEdgeSpec,
        label: CoxLabel,
    ) -> Result<Self, MatrixError> {
        spec.check()?;
        let bound = spec.labels[2];
        if label < bound {
            return Err(MatrixError::EdgeLabelBelowBound { label, bound });
        }
        let (i, j) = spec.pair;
        self.clone().with(i, j, label)
    }

    /// Parses the line-oriented text format, or the JSON form when the
    /// document starts with `{`.
    pub fn parse(text: &str) -> Result<Self, MatrixError> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            parse_text(text)
        }
    }

    pub fn from_json(text: &str) -> Result<Self, MatrixError> {
        let doc: MatrixDocument =
            serde_json::from_str(text).map_err(|e| MatrixError::Json(e.to_string()))?;
        doc.into_matrix()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatrixDocument::from(self)).expect("matrix document serializes")
    }

    /// Renders the text format, listing only entries different from 2.
    pub fn to_text(&self) -> String {
        let mut out = format!("rank {}\n", self.rank);
        for (i, j, m) in self.pairs() {
            if m != CoxLabel::TWO {
                out.push_str(&format!("m {} {} = {}\n", i + 1, j + 1, m));
            }
        }
        out
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rank {
            let row: Vec<String> = (0..self.rank).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for CoxeterMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CoxeterMatrix::parse(s)
    }
}

/// An edge of type `<k1, k2, n, l1, l2>`: the edge itself carries `n`, the
/// four edges incident to its endpoints carry the other labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractibleEdgeSpec {
    /// 0-based pair of generators (faces) meeting along the edge.
    pub pair: (usize, usize),
    pub labels: [CoxLabel; 5],
}

impl ContractibleEdgeSpec {
    pub fn new(pair: (usize, usize), bound: CoxLabel) -> Self {
        let two = CoxLabel::TWO;
        ContractibleEdgeSpec {
            pair,
            labels: [two, two, bound, two, two],
        }
    }

    pub fn check(&self) -> Result<(), MatrixError> {
        let [k1, k2, n, l1, l2] = self.labels;
        let two = CoxLabel::TWO;
        if [k1, k2, l1, l2].iter().any(|&x| x != two) || n < two {
            let s: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
            return Err(MatrixError::NotContractible(s.join(",")));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDocument {
    rank: usize,
    entries: Vec<(usize, usize, LabelToken)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelToken {
    Number(u64),
    Text(String),
}

impl From<&CoxeterMatrix> for MatrixDocument {
    fn from(m: &CoxeterMatrix) -> Self {
        MatrixDocument {
            rank: m.rank,
            entries: m
                .pairs()
                .filter(|&(_, _, l)| l != CoxLabel::TWO)
                .map(|(i, j, l)| (i + 1, j + 1, LabelToken::Text(l.to_string())))
                .collect(),
        }
    }
}

impl MatrixDocument {
    fn into_matrix(self) -> Result<CoxeterMatrix, MatrixError> {
        let mut builder = EntryBuilder::new(self.rank)?;
        for (i, j, token) in self.entries {
            let label = match token {
                LabelToken::Number(m) => CoxLabel::finite(m)?,
                LabelToken::Text(s) => s.parse()?,
            };
            builder.set(i, j, label)?;
        }
        builder.finish()
    }
}

/// Collects 1-based explicit entries and reports conflicts.
struct EntryBuilder {
    rank: usize,
    explicit: HashMap<(usize, usize), CoxLabel>,
}

impl EntryBuilder {
    fn new(rank: usize) -> Result<Self, MatrixError> {
        if rank == 0 {
            return Err(MatrixError::ZeroRank);
        }
        Ok(EntryBuilder {
            rank,
            explicit: HashMap::new(),
        })
    }

    fn set(&mut self, i: usize, j: usize, label: CoxLabel) -> Result<(), MatrixError> {
        for index in [i, j] {
            if index == 0 || index > self.rank {
                return Err(MatrixError::IndexOutOfRange {
                    index,
                    rank: self.rank,
                });
            }
        }
        if i == j {
            if label != CoxLabel::ONE {
                return Err(MatrixError::BadDiagonal { i, label });
            }
            return Ok(());
        }
        if label < CoxLabel::TWO {
            return Err(MatrixError::OffDiagonalTooSmall {
                i,
                j,
                label: label.to_string(),
            });
        }
        if let Some(&prev) = self.explicit.get(&(i, j)) {
            if prev != label {
                return Err(MatrixError::Conflict { i, j });
            }
        }
        if let Some(&prev) = self.explicit.get(&(j, i)) {
            if prev != label {
                return Err(MatrixError::Asymmetric { i, j });
            }
        }
        self.explicit.insert((i, j), label);
        Ok(())
    }

    fn finish(self) -> Result<CoxeterMatrix, MatrixError> {
        let mut m = CoxeterMatrix::new(self.rank)?;
        for ((i, j), label) in self.explicit {
            m = m.with(i - 1, j - 1, label)?;
        }
        Ok(m)
    }
}

fn parse_text(text: &str) -> Result<CoxeterMatrix, MatrixError> {
    let mut builder: Option<EntryBuilder> = None;
    for (line_no, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("");
        let mut offset = 0;
        for stmt in line.split(';') {
            let start = offset;
            offset += stmt.len() + 1;
            let tokens = tokenize(stmt, start);
            if tokens.is_empty() {
                continue;
            }
            let err = |column: usize, message: String| MatrixError::Syntax {
                line: line_no + 1,
                column: column + 1,
                message,
            };
            match tokens[0].1 {
                "rank" => {
                    if builder.is_some() {
                        return Err(err(tokens[0].0, "duplicate rank statement".into()));
                    }
                    if tokens.len() != 2 {
                        return Err(err(tokens[0].0, "expected `rank <n>`".into()));
                    }
                    let n: usize = tokens[1]
                        .1
                        .parse()
                        .map_err(|_| err(tokens[1].0, format!("invalid rank {:?}", tokens[1].1)))?;
                    builder = Some(EntryBuilder::new(n)?);
                }
                "m" => {
                    let b = builder
                        .as_mut()
                        .ok_or_else(|| err(tokens[0].0, "`rank` must come first".into()))?;
                    if tokens.len() != 5 || tokens[3].1 != "=" {
                        return Err(err(tokens[0].0, "expected `m <i> <j> = <label>`".into()));
                    }
                    let index = |k: usize| -> Result<usize, MatrixError> {
                        tokens[k].1.parse().map_err(|_| {
                            err(tokens[k].0, format!("invalid index {:?}", tokens[k].1))
                        })
                    };
                    let (i, j) = (index(1)?, index(2)?);
                    let label: CoxLabel = tokens[4].1.parse().map_err(|e| match e {
                        MatrixError::Syntax { message, .. } => err(tokens[4].0, message),
                        other => other,
                    })?;
                    b.set(i, j, label)?;
                }
                other => {
                    return Err(err(tokens[0].0, format!("unknown statement {other:?}")));
                }
            }
        }
    }
    builder
        .ok_or(MatrixError::Syntax {
            line: 1,
            column: 1,
            message: "missing `rank` statement".into(),
        })?
        .finish()
}

/// Splits on whitespace, keeping `=` as its own token; yields byte columns.
fn tokenize(stmt: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (pos, ch) in stmt.char_indices() {
        if ch.is_whitespace() || ch == '=' {
            if let Some(s) = start.take() {
                out.push((base + s, &stmt[s..pos]));
            }
            if ch == '=' {
                out.push((base + pos, &stmt[pos..pos + 1]));
            }
        } else if start.is_none() {
            start = Some(pos);
        }
    }
    if let Some(s) = start {
        out.push((base + s, &stmt[s..]));
    }
    out
}
