//! Gram matrix of a Coxeter system and the elliptic / affine / non-affine
//! trichotomy, decided spectrally and cross-checked against exact diagram
//! recognition.

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;
use thiserror::Error;

use crate::catalog::is_finite_subset;
use crate::diagram::{components, LocalDiagram};
use crate::matrix::{CoxLabel, CoxeterMatrix};
use crate::subset::GeneratorSet;

/// Eigenvalues of absolute value at most this are treated as zero.
pub const EIGEN_ZERO_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GrowthType {
    Elliptic,
    Affine,
    NonAffine,
}

impl fmt::Display for GrowthType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthType::Elliptic => "elliptic",
            GrowthType::Affine => "affine",
            GrowthType::NonAffine => "non-affine",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error(
        "spectral verdict {spectral} (smallest eigenvalue {min_eigenvalue:e}) \
         disagrees with diagram recognition {exact}"
    )]
    Inconsistent {
        spectral: GrowthType,
        exact: GrowthType,
        min_eigenvalue: f64,
    },
}

/// `G_ij = −cos(π/m_ij)`, with `−1` for `m = ∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    rank: usize,
    entries: Vec<f64>,
}

impl GramMatrix {
    pub fn new(m: &CoxeterMatrix) -> Self {
        let n = m.rank();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = if i == j {
                    1.0
                } else {
                    -m.get(i, j).cos_pi_over()
                };
            }
        }
        GramMatrix { rank: n, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.rank + j]
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let a = DMatrix::from_row_slice(self.rank, self.rank, &self.entries);
        let mut ev: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn spectral_type(&self) -> (GrowthType, f64) {
        let min = self.eigenvalues()[0];
        let t = if min > EIGEN_ZERO_TOL {
            GrowthType::Elliptic
        } else if min >= -EIGEN_ZERO_TOL {
            GrowthType::Affine
        } else {
            GrowthType::NonAffine
        };
        (t, min)
    }
}

/// Irreducible affine types, indexed by the rank of the associated finite
/// type (so `A(n)` has `n + 1` generators).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AffineType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineType::A(n) => write!(f, "~A{n}"),
            AffineType::B(n) => write!(f, "~B{n}"),
            AffineType::C(n) => write!(f, "~C{n}"),
            AffineType::D(n) => write!(f, "~D{n}"),
            AffineType::E6 => f.write_str("~E6"),
            AffineType::E7 => f.write_str("~E7"),
            AffineType::E8 => f.write_str("~E8"),
            AffineType::F4 => f.write_str("~F4"),
            AffineType::G2 => f.write_str("~G2"),
        }
    }
}

/// Affine type of a connected diagram component, if any.
pub fn recognize_affine(m: &CoxeterMatrix, component: GeneratorSet) -> Option<AffineType> {
    if component.len() < 2 || components(m, component).len() != 1 {
        return None;
    }
    recognize_affine_connected(&LocalDiagram::new(m, component))
}

fn recognize_affine_connected(g: &LocalDiagram) -> Option<AffineType> {
    let n = g.len() as u32;
    let three = CoxLabel::Finite(3);
    if g.labels().any(CoxLabel::is_infinite) {
        return (n == 2).then_some(AffineType::A(1));
    }
    if g.edges == g.len() {
        let cycle = g.max_degree() == 2 && g.labels().all(|l| l == three);
        return (cycle && n >= 3).then_some(AffineType::A(n - 1));
    }
    if !g.is_tree() {
        return None;
    }
    if let Some(labels) = g.path_labels() {
        let v: Vec<u32> = labels.iter().map(|l| l.value().expect("finite")).collect();
        let k = v.len();
        return match v.as_slice() {
            [3, 6] | [6, 3] => Some(AffineType::G2),
            [3, 3, 4, 3] | [3, 4, 3, 3] => Some(AffineType::F4),
            [4, mid @ .., 4] if k >= 2 && mid.iter().all(|&x| x == 3) => Some(AffineType::C(n - 1)),
            _ => None,
        };
    }
    let deg3 = g.vertices_of_degree(3);
    let deg4 = g.vertices_of_degree(4);
    let leaf_neighbours = |v: usize| g.adj[v].iter().filter(|(w, _)| g.degree(*w) == 1).count();
    match (deg3.len(), deg4.len(), g.max_degree()) {
        (0, 1, 4) => {
            let simple = n == 5 && g.labels().all(|l| l == three);
            simple.then_some(AffineType::D(4))
        }
        (1, 0, 3) => {
            let arms = g.arms(deg3[0])?;
            let mut lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            lens.sort_unstable();
            if g.labels().all(|l| l == three) {
                return match lens.as_slice() {
                    [2, 2, 2] => Some(AffineType::E6),
                    [1, 3, 3] => Some(AffineType::E7),
                    [1, 2, 5] => Some(AffineType::E8),
                    _ => None,
                };
            }
            // ~B: arms 1,1,k with the single 4 on the far edge of the long arm
            let fours: Vec<&Vec<CoxLabel>> = arms
                .iter()
                .filter(|a| a.contains(&CoxLabel::Finite(4)))
                .collect();
            let others_plain = arms.iter().all(|a| {
                a.iter()
                    .enumerate()
                    .all(|(i, &l)| l == three || (l == CoxLabel::Finite(4) && i == a.len() - 1))
            });
            let four_arm_ok = fours.len() == 1
                && fours[0]
                    .iter()
                    .filter(|&&l| l == CoxLabel::Finite(4))
                    .count()
                    == 1;
            let short = arms
                .iter()
                .filter(|a| a.len() == 1 && a[0] == three)
                .count();
            (four_arm_ok && others_plain && short >= 2 && n >= 4).then_some(AffineType::B(n - 1))
        }
        (2, 0, 3) => {
            let ok = g.labels().all(|l| l == three)
                && deg3.iter().all(|&v| leaf_neighbours(v) == 2)
                && n >= 6;
            ok.then_some(AffineType::D(n - 1))
        }
        _ => None,
    }
}

/// Exact growth type from the diagram: every component finite gives
/// elliptic; every component finite or affine (at least one affine) gives
/// affine; anything else is non-affine.
pub fn exact_growth_type(m: &CoxeterMatrix) -> GrowthType {
    let mut affine = false;
    for c in components(m, GeneratorSet::full(m.rank())) {
        if is_finite_subset(m, c).expect("component in range") {
            continue;
        }
        if recognize_affine(m, c).is_some() {
            affine = true;
        } else {
            return GrowthType::NonAffine;
        }
    }
    if affine {
        GrowthType::Affine
    } else {
        GrowthType::Elliptic
    }
}

pub fn classify(m: &CoxeterMatrix) -> Result<GrowthType, ClassifyError> {
    let (spectral, min_eigenvalue) = GramMatrix::new(m).spectral_type();
    let exact = exact_growth_type(m);
    if spectral != exact {
        return Err(ClassifyError::Inconsistent {
            spectral,
            exact,
            min_eigenvalue,
        });
    }
    Ok(exact)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(v: u32) -> CoxLabel {
        CoxLabel::Finite(v)
    }

    fn path(labels: &[CoxLabel]) -> CoxeterMatrix {
        let mut m = CoxeterMatrix::new(labels.len() + 1).unwrap();
        for (i, &l) in labels.iter().enumerate() {
            m = m.with(i, i + 1, l).unwrap();
        }
        m
    }

    #[test]
    fn gram_examples() {
        let g = GramMatrix::new(&CoxeterMatrix::dihedral(lab(3)).unwrap());
        assert_eq!(g.get(0, 1), -0.5);
        assert_eq!(
            GramMatrix::new(&CoxeterMatrix::new(2).unwrap()).get(0, 1),
            0.0
        );
        assert_eq!(
            GramMatrix::new(&CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap()).get(1, 0),
            -1.0
        );
    }

    #[test]
    fn classify_examples() {
        let a2 = CoxeterMatrix::dihedral(lab(3)).unwrap();
        let ev = GramMatrix::new(&a2).eigenvalues();
        assert!((ev[0] - 0.5).abs() < 1e-12 && (ev[1] - 1.5).abs() < 1e-12);
        assert_eq!(classify(&a2), Ok(GrowthType::Elliptic));
        let inf = CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap();
        assert_eq!(classify(&inf), Ok(GrowthType::Affine));
        let all_inf = CoxeterMatrix::uniform(3, CoxLabel::Infinity).unwrap();
        let ev = GramMatrix::new(&all_inf).eigenvalues();
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[2] - 2.0).abs() < 1e-12);
        assert_eq!(classify(&all_inf), Ok(GrowthType::NonAffine));
        let t237 = CoxeterMatrix::polygon(&[lab(2), lab(3), lab(7)]).unwrap();
        assert_eq!(classify(&t237), Ok(GrowthType::NonAffine));
        let t236 = CoxeterMatrix::polygon(&[lab(2), lab(3), lab(6)]).unwrap();
        assert_eq!(classify(&t236), Ok(GrowthType::Affine));
        assert_eq!(
            recognize_affine(&t236, GeneratorSet::full(3)),
            Some(AffineType::G2)
        );
        let t235 = CoxeterMatrix::polygon(&[lab(2), lab(3), lab(5)]).unwrap();
        assert_eq!(classify(&t235), Ok(GrowthType::Elliptic));
    }

    #[test]
    fn affine_catalog_is_spectrally_affine() {
        let mut cases: Vec<(CoxeterMatrix, AffineType)> = vec![
            (
                CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap(),
                AffineType::A(1),
            ),
            (path(&[lab(4), lab(4)]), AffineType::C(2)),
            (path(&[lab(4), lab(3), lab(3), lab(4)]), AffineType::C(4)),
            (path(&[lab(3), lab(4), lab(3), lab(3)]), AffineType::F4),
            (path(&[lab(6), lab(3)]), AffineType::G2),
        ];
        for n in 3..=6 {
            let mut c = path(&vec![lab(3); n - 1]);
            c = c.with(0, n - 1, lab(3)).unwrap();
            cases.push((c, AffineType::A(n as u32 - 1)));
        }
        // ~B_n: 0-1, 0-2 short arms, long arm 0-3-..., 4 at the far end
        for n in 3..=6u32 {
            let size = n as usize + 1;
            let mut m = CoxeterMatrix::new(size).unwrap();
            m = m.with(0, 1, lab(3)).unwrap().with(0, 2, lab(3)).unwrap();
            let mut prev = 0;
            for v in 3..size {
                let l = if v == size - 1 { lab(4) } else { lab(3) };
                m = m.with(prev, v, l).unwrap();
                prev = v;
            }
            cases.push((m, AffineType::B(n)));
        }
        // ~D_n: two branch vertices each with two leaves
        for n in 4..=7u32 {
            let size = n as usize + 1;
            let mut m = CoxeterMatrix::new(size).unwrap();
            if n == 4 {
                for v in 1..5 {
                    m = m.with(0, v, lab(3)).unwrap();
                }
            } else {
                // spine 2..=size-3, leaves 0,1 on 2 and size-2,size-1 on size-3
                let (a, b) = (2, size - 3);
                for v in a..b {
                    m = m.with(v, v + 1, lab(3)).unwrap();
                }
                m = m.with(0, a, lab(3)).unwrap().with(1, a, lab(3)).unwrap();
                m = m
                    .with(size - 2, b, lab(3))
                    .unwrap()
                    .with(size - 1, b, lab(3))
                    .unwrap();
            }
            cases.push((m, AffineType::D(n)));
        }
        let star = |arms: &[usize]| {
            let n = 1 + arms.iter().sum::<usize>();
            let mut m = CoxeterMatrix::new(n).unwrap();
            let mut next = 1;
            for &len in arms {
                let mut prev = 0;
                for _ in 0..len {
                    m = m.with(prev, next, lab(3)).unwrap();
                    prev = next;
                    next += 1;
                }
            }
            m
        };
        cases.push((star(&[2, 2, 2]), AffineType::E6));
        cases.push((star(&[1, 3, 3]), AffineType::E7));
        cases.push((star(&[1, 2, 5]), AffineType::E8));
        for (m, t) in cases {
            assert_eq!(
                recognize_affine(&m, GeneratorSet::full(m.rank())),
                Some(t),
                "{t}"
            );
            let (spectral, min) = GramMatrix::new(&m).spectral_type();
            assert_eq!(spectral, GrowthType::Affine, "{t}: {min}");
            assert_eq!(classify(&m), Ok(GrowthType::Affine));
        }
    }

    #[test]
    fn reducible_mixtures() {
        // A1 ⊔ ~A1 is affine, A1 ⊔ (all-∞ triangle) is not
        let m = CoxeterMatrix::new(3)
            .unwrap()
            .with(1, 2, CoxLabel::Infinity)
            .unwrap();
        assert_eq!(classify(&m), Ok(GrowthType::Affine));
        let m = CoxeterMatrix::new(4)
            .unwrap()
            .with(1, 2, CoxLabel::Infinity)
            .unwrap()
            .with(2, 3, CoxLabel::Infinity)
            .unwrap()
            .with(1, 3, CoxLabel::Infinity)
            .unwrap();
        assert_eq!(classify(&m), Ok(GrowthType::NonAffine));
    }
}
