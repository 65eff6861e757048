//! Brute-force ground truth: word reduction by braid moves and deletions,
//! Cayley balls by breadth-first search, and the ball-isomorphism test
//! behind the distance between marked groups.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::matrix::CoxeterMatrix;

pub const DEFAULT_WORD_CAP: usize = 24;
pub const DEFAULT_VERTEX_BUDGET: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("word of length {len} exceeds the cap {cap}")]
    WordTooLong { len: usize, cap: usize },
    #[error("radius {radius} exceeds the word-length cap {cap}")]
    RadiusTooLarge { radius: usize, cap: usize },
    #[error("ball exceeds the vertex budget of {budget}")]
    BudgetExceeded { budget: usize },
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank {0} is too large for the oracle")]
    RankTooLarge(usize),
    #[error("cannot parse word: {0}")]
    Parse(String),
}

/// A word in the generators, 0-based letters. Displayed 1-based as `(1,2,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn from_one_based(letters: &[usize]) -> Result<Self, OracleError> {
        letters
            .iter()
            .map(|&l| match l {
                1..=256 => Ok((l - 1) as u8),
                _ => Err(OracleError::Parse(format!("letter {l}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| (l as usize + 1).to_string())
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `1,2,1`, `(1,2,1)`, `()` or the empty string.
impl FromStr for Word {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Word::identity());
        }
        let letters = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| OracleError::Parse(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Word::from_one_based(&letters)
    }
}

/// Word reduction with memoized normal forms: the lexicographically least
/// reduced word representing the same element.
pub struct Reducer<'a> {
    m: &'a CoxeterMatrix,
    cap: usize,
    memo: HashMap<Vec<u8>, Vec<u8>>,
}

impl<'a> Reducer<'a> {
    pub fn new(m: &'a CoxeterMatrix) -> Self {
        Self::with_cap(m, DEFAULT_WORD_CAP)
    }

    pub fn with_cap(m: &'a CoxeterMatrix, cap: usize) -> Self {
        Reducer {
            m,
            cap,
            memo: HashMap::new(),
        }
    }

    pub fn reduce(&mut self, w: &Word) -> Result<Word, OracleError> {
        if w.len() > self.cap {
            return Err(OracleError::WordTooLong {
                len: w.len(),
                cap: self.cap,
            });
        }
        if let Some(&l) = w.0.iter().find(|&&l| l as usize >= self.m.rank()) {
            return Err(OracleError::LetterOutOfRange {
                letter: l as usize + 1,
                rank: self.m.rank(),
            });
        }
        if let Some(nf) = self.memo.get(&w.0) {
            return Ok(Word(nf.clone()));
        }
        let nf = self.normal_form(w.0.clone());
        self.memo.insert(w.0.clone(), nf.clone());
        Ok(Word(nf))
    }

    fn normal_form(&self, mut cur: Vec<u8>) -> Vec<u8> {
        'restart: loop {
            let mut seen: HashSet<Vec<u8>> = HashSet::from([cur.clone()]);
            let mut stack = vec![cur.clone()];
            while let Some(x) = stack.pop() {
                if let Some(i) = x.windows(2).position(|p| p[0] == p[1]) {
                    let mut y = x;
                    y.drain(i..i + 2);
                    cur = y;
                    continue 'restart;
                }
                for y in self.braid_moves(&x) {
                    if seen.insert(y.clone()) {
                        stack.push(y);
                    }
                }
            }
            return seen.into_iter().min().expect("class is nonempty");
        }
    }

    /// Words obtained by replacing one alternating factor `sts…` of length
    /// `m_st` with `tst…`.
    fn braid_moves(&self, x: &[u8]) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for i in 0..x.len().saturating_sub(1) {
            let (s, t) = (x[i], x[i + 1]);
            let Some(k) = self.m.get(s as usize, t as usize).value() else {
                continue;
            };
            let k = k as usize;
            if i + k > x.len() {
                continue;
            }
            let alternates = (0..k).all(|j| x[i + j] == if j % 2 == 0 { s } else { t });
            if alternates {
                let mut y = x.to_vec();
                for j in 0..k {
                    y[i + j] = if j % 2 == 0 { t } else { s };
                }
                out.push(y);
            }
        }
        out
    }
}

pub fn reduce_word(m: &CoxeterMatrix, w: &Word) -> Result<Word, OracleError> {
    Reducer::new(m).reduce(w)
}

/// The ball of radius `R` in the Cayley graph. Vertices are normal forms
/// in breadth-first order; `adjacency[v][s]` is the vertex `v·s` when it
/// lies in the ball.
#[derive(Clone, Debug)]
pub struct CayleyBall {
    pub radius: usize,
    pub rank: usize,
    pub vertices: Vec<Word>,
    pub lengths: Vec<usize>,
    pub adjacency: Vec<Vec<Option<usize>>>,
}

impl CayleyBall {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Labeled directed edges `(from, to, generator)`, both directions.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (u, row) in self.adjacency.iter().enumerate() {
            for (s, w) in row.iter().enumerate() {
                if let Some(w) = w {
                    out.push((u, *w, s));
                }
            }
        }
        out
    }

    /// Number of elements of each length `0..=radius`.
    pub fn layer_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.radius + 1];
        for &l in &self.lengths {
            counts[l] += 1;
        }
        counts
    }

    /// Graphviz rendering; node labels are normal forms.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ball {\n");
        for (i, w) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{w}\"];\n"));
        }
        for (u, w, s) in self.edges() {
            out.push_str(&format!("  v{u} -> v{w} [label=\"{}\"];\n", s + 1));
        }
        out.push_str("}\n");
        out
    }
}

pub fn ball(m: &CoxeterMatrix, radius: usize) -> Result<CayleyBall, OracleError> {
    ball_with_limits(m, radius, DEFAULT_WORD_CAP, DEFAULT_VERTEX_BUDGET)
}

pub fn ball_with_limits(
    m: &CoxeterMatrix,
    radius: usize,
    cap: usize,
    budget: usize,
) -> Result<CayleyBall, OracleError> {
    let n = m.rank();
    if n > u8::MAX as usize {
        return Err(OracleError::RankTooLarge(n));
    }
    if radius > cap {
        return Err(OracleError::RadiusTooLarge { radius, cap });
    }
    let mut reducer = Reducer::with_cap(m, cap);
    let mut vertices = vec![Word::identity()];
    let mut lengths = vec![0];
    let mut adjacency = vec![vec![None; n]];
    let mut index: HashMap<Word, usize> = HashMap::from([(Word::identity(), 0)]);
    let mut layer_start = 0;
    for k in 0..radius {
        let layer_end = vertices.len();
        for u in layer_start..layer_end {
            for s in 0..n {
                if adjacency[u][s].is_some() {
                    continue;
                }
                let mut w = vertices[u].0.clone();
                w.push(s as u8);
                let nf = reducer.reduce(&Word(w))?;
                let v = match index.get(&nf) {
                    Some(&v) => v,
                    None => {
                        if vertices.len() >= budget {
                            return Err(OracleError::BudgetExceeded { budget });
                        }
                        debug_assert_eq!(nf.len(), k + 1);
                        index.insert(nf.clone(), vertices.len());
                        vertices.push(nf);
                        lengths.push(k + 1);
                        adjacency.push(vec![None; n]);
                        vertices.len() - 1
                    }
                };
                // generators are involutions, so edges come in pairs
                adjacency[u][s] = Some(v);
                adjacency[v][s] = Some(u);
            }
        }
        layer_start = layer_end;
    }
    Ok(CayleyBall {
        radius,
        rank: n,
        vertices,
        lengths,
        adjacency,
    })
}

/// Growth coefficients `a(0..=m_max)` from the layers of a ball.
pub fn oracle_coefficients(m: &CoxeterMatrix, m_max: usize) -> Result<Vec<u64>, OracleError> {
    Ok(ball(m, m_max)?.layer_counts())
}

/// CSV `m,a,s` with cumulative ball sizes.
pub fn coefficients_csv(a: &[u64]) -> String {
    let mut out = String::from("m,a,s\n");
    let mut s = 0u64;
    for (i, c) in a.iter().enumerate() {
        s += c;
        out.push_str(&format!("{i},{c},{s}\n"));
    }
    out
}

/// Whether the sub-balls of radius `r` of two prebuilt balls are
/// isomorphic as rooted labeled graphs. Determinism means the only
/// candidate map is the one found by walking both from the root in step.
pub fn sub_balls_isomorphic(a: &CayleyBall, b: &CayleyBall, r: usize) -> bool {
    assert!(
        r <= a.radius && r <= b.radius,
        "radius beyond prebuilt balls"
    );
    if a.rank != b.rank {
        return false;
    }
    let inside = |ball: &CayleyBall, v: Option<usize>| v.filter(|&v| ball.lengths[v] <= r);
    let mut fwd: HashMap<usize, usize> = HashMap::from([(0, 0)]);
    let mut back: HashMap<usize, usize> = HashMap::from([(0, 0)]);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some((u, v)) = queue.pop_front() {
        for s in 0..a.rank {
            match (inside(a, a.adjacency[u][s]), inside(b, b.adjacency[v][s])) {
                (None, None) => {}
                (Some(x), Some(y)) => match (fwd.get(&x), back.get(&y)) {
                    (Some(&fy), Some(&bx)) if fy == y && bx == x => {}
                    (None, None) => {
                        fwd.insert(x, y);
                        back.insert(y, x);
                        queue.push_back((x, y));
                    }
                    _ => return false,
                },
                _ => return false,
            }
        }
    }
    let count = |ball: &CayleyBall| ball.lengths.iter().filter(|&&l| l <= r).count();
    fwd.len() == count(a) && back.len() == count(b)
}

pub fn balls_isomorphic(
    m1: &CoxeterMatrix,
    m2: &CoxeterMatrix,
    r: usize,
) -> Result<bool, OracleError> {
    if m1.rank() != m2.rank() {
        return Err(OracleError::RankMismatch {
            left: m1.rank(),
            right: m2.rank(),
        });
    }
    Ok(sub_balls_isomorphic(&ball(m1, r)?, &ball(m2, r)?, r))
}

/// What finite inspection of balls says about `v` and `d = e^{−v}`.
/// Isomorphic balls of radius `R` mean `v ≥ 2R + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceBound {
    pub r_max: usize,
    pub agree_through: usize,
    pub first_disagreement: Option<usize>,
    pub v_lower: u64,
    /// Present when a disagreement was found: `v ≤ 2R*`.
    pub v_upper: Option<u64>,
    pub d_upper: f64,
    /// `d > d_lower` when a disagreement was found.
    pub d_lower: Option<f64>,
}

impl DistanceBound {
    pub fn exact(&self) -> bool {
        self.v_upper == Some(self.v_lower)
    }

    pub fn d_exact(&self) -> Option<f64> {
        self.exact().then(|| (-(self.v_lower as f64)).exp())
    }
}

impl fmt::Display for DistanceBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.first_disagreement, self.d_lower) {
            (Some(r), Some(lo)) => write!(
                f,
                "balls agree through R = {}, differ at R = {r}; v in [{}, {}]; d in ({lo:e}, {:e}]",
                self.agree_through,
                self.v_lower,
                self.v_upper.unwrap_or(self.v_lower),
                self.d_upper
            ),
            _ => write!(
                f,
                "balls agree through R = {}; v >= {}; d <= {:e}",
                self.agree_through, self.v_lower, self.d_upper
            ),
        }
    }
}

pub fn marked_distance_bound(
    m1: &CoxeterMatrix,
    m2: &CoxeterMatrix,
    r_max: usize,
) -> Result<DistanceBound, OracleError> {
    if m1.rank() != m2.rank() {
        return Err(OracleError::RankMismatch {
            left: m1.rank(),
            right: m2.rank(),
        });
    }
    let (a, b) = (ball(m1, r_max)?, ball(m2, r_max)?);
    let disagreement = (0..=r_max).find(|&r| !sub_balls_isomorphic(&a, &b, r));
    let threshold = |r: usize| (-((2 * r + 1) as f64)).exp();
    Ok(match disagreement {
        Some(rs) => {
            // radius 0 balls are single points, so rs >= 1
            let agree = rs - 1;
            DistanceBound {
                r_max,
                agree_through: agree,
                first_disagreement: Some(rs),
                v_lower: 2 * agree as u64 + 1,
                v_upper: Some(2 * rs as u64),
                d_upper: threshold(agree),
                d_lower: Some(threshold(rs)),
            }
        }
        None => DistanceBound {
            r_max,
            agree_through: r_max,
            first_disagreement: None,
            v_lower: 2 * r_max as u64 + 1,
            v_upper: None,
            d_upper: threshold(r_max),
            d_lower: None,
        },
    })
}
