#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use coxeter_growth::matrix::{ContractibleEdgeSpec, CoxLabel, CoxeterMatrix};

pub fn lab(v: u32) -> CoxLabel {
    CoxLabel::Finite(v)
}

pub const INF: CoxLabel = CoxLabel::Infinity;

pub fn triangle(a: CoxLabel, b: CoxLabel, c: CoxLabel) -> CoxeterMatrix {
    CoxeterMatrix::polygon(&[a, b, c]).unwrap()
}

pub fn dihedral(m: CoxLabel) -> CoxeterMatrix {
    CoxeterMatrix::dihedral(m).unwrap()
}

pub fn path(labels: &[CoxLabel]) -> CoxeterMatrix {
    let mut m = CoxeterMatrix::new(labels.len() + 1).unwrap();
    for (i, &l) in labels.iter().enumerate() {
        m = m.with(i, i + 1, l).unwrap();
    }
    m
}

/// Right-angled rank 4 with two infinite entries.
pub fn right_angled_rank4() -> CoxeterMatrix {
    CoxeterMatrix::new(4)
        .unwrap()
        .with(0, 1, INF)
        .unwrap()
        .with(2, 3, INF)
        .unwrap()
}

/// The oracle-equivalence suite.
pub fn suite() -> Vec<(String, CoxeterMatrix)> {
    let mut out = vec![
        ("(2,3,7)".to_string(), triangle(lab(2), lab(3), lab(7))),
        ("(2,4,5)".to_string(), triangle(lab(2), lab(4), lab(5))),
        ("(3,3,4)".to_string(), triangle(lab(3), lab(3), lab(4))),
    ];
    for m in 3..=8 {
        out.push((format!("I2({m})"), dihedral(lab(m))));
    }
    out.push(("I2(inf)".to_string(), dihedral(INF)));
    out.push((
        "rank-3 all-inf".to_string(),
        CoxeterMatrix::uniform(3, INF).unwrap(),
    ));
    out.push(("rank-4 right-angled".to_string(), right_angled_rank4()));
    out
}

/// Suite members carrying at least one infinite entry, plus a few larger
/// ones, for deformation experiments.
pub fn infinite_suite() -> Vec<(String, CoxeterMatrix)> {
    vec![
        ("(2,3,inf)".to_string(), triangle(lab(2), lab(3), INF)),
        ("(2,4,inf)".to_string(), triangle(lab(2), lab(4), INF)),
        ("(3,3,inf)".to_string(), triangle(lab(3), lab(3), INF)),
        ("I2(inf)".to_string(), dihedral(INF)),
        (
            "rank-3 all-inf".to_string(),
            CoxeterMatrix::uniform(3, INF).unwrap(),
        ),
        ("rank-4 right-angled".to_string(), right_angled_rank4()),
        (
            "quad (2,3,2,inf)".to_string(),
            CoxeterMatrix::polygon(&[lab(2), lab(3), lab(2), INF]).unwrap(),
        ),
        (
            "pentagon (2,2,2,2,2)".to_string(),
            CoxeterMatrix::polygon(&[lab(2); 5]).unwrap(),
        ),
        (
            "lambert cube limit".to_string(),
            lambert_cube(INF, lab(3), lab(3)),
        ),
    ]
}

/// Lambert cube: faces x−, x+, y−, y+, z−, z+ as generators 0..6,
/// opposite faces ultraparallel, the three essential edges labeled
/// `k` (x+, y+), `l` (y−, z+), `n` (x−, z−), all other adjacent pairs 2.
pub fn lambert_cube(k: CoxLabel, l: CoxLabel, n: CoxLabel) -> CoxeterMatrix {
    CoxeterMatrix::new(6)
        .unwrap()
        .with(0, 1, INF)
        .unwrap()
        .with(2, 3, INF)
        .unwrap()
        .with(4, 5, INF)
        .unwrap()
        .with(1, 3, k)
        .unwrap()
        .with(2, 5, l)
        .unwrap()
        .with(0, 4, n)
        .unwrap()
}

/// The x+/y+ edge of the Lambert cube; its endpoints lie on z− and z+,
/// both meeting x+ and y+ at right angles.
pub fn lambert_edge_spec() -> ContractibleEdgeSpec {
    ContractibleEdgeSpec::new((1, 3), lab(3))
}

fn random_label(rng: &mut ChaCha8Rng) -> CoxLabel {
    if rng.gen_bool(0.15) {
        INF
    } else {
        lab(rng.gen_range(2..=12))
    }
}

/// A random matrix and an entrywise larger one.
pub fn comparable_pair(rng: &mut ChaCha8Rng) -> (CoxeterMatrix, CoxeterMatrix) {
    let n = rng.gen_range(1..=5);
    let (mut a, mut b) = (
        CoxeterMatrix::new(n).unwrap(),
        CoxeterMatrix::new(n).unwrap(),
    );
    for i in 0..n {
        for j in (i + 1)..n {
            let l = random_label(rng);
            let u = match l {
                CoxLabel::Finite(v) if rng.gen_bool(0.6) => {
                    if rng.gen_bool(0.15) {
                        INF
                    } else {
                        lab(rng.gen_range(v..=12))
                    }
                }
                _ => l,
            };
            a = a.with(i, j, l).unwrap();
            b = b.with(i, j, u).unwrap();
        }
    }
    (a, b)
}
