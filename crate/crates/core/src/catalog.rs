//! Irreducible finite Coxeter types, their Solomon growth polynomials, and
//! the family of finite parabolic subsets of a Coxeter system.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{components, LocalDiagram};
use crate::matrix::{CoxLabel, CoxeterMatrix};
use crate::poly::{CyclotomicProduct, IntPolynomial};
use crate::subset::GeneratorSet;

pub const MAX_ENUMERATION_RANK: usize = 25;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("generator {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("subset {0} is not connected in the diagram")]
    Disconnected(GeneratorSet),
    #[error("empty component")]
    EmptyComponent,
    #[error("component {0} is not of finite type")]
    NotFinite(GeneratorSet),
    #[error("rank {0} exceeds the enumeration bound {MAX_ENUMERATION_RANK}")]
    RankTooLarge(usize),
    #[error("label {0} carries no diagram mark; need a finite label >= 4")]
    UnmarkedLabel(CoxLabel),
    #[error("{0} is not a legal finite type")]
    IllegalType(String),
}

/// An irreducible finite Coxeter type. Dihedral types of label 3 and 4 are
/// always reported as `A(2)` and `B(2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteType {
    A(u32),
    B(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl FiniteType {
    /// Canonical dihedral type with label `m ≥ 3`.
    pub fn dihedral(m: u32) -> Result<Self, CatalogError> {
        match m {
            3 => Ok(FiniteType::A(2)),
            4 => Ok(FiniteType::B(2)),
            m if m >= 5 => Ok(FiniteType::I2(m)),
            m => Err(CatalogError::IllegalType(format!("I2({m})"))),
        }
    }

    pub fn validate(self) -> Result<Self, CatalogError> {
        let ok = match self {
            FiniteType::A(n) => n >= 1,
            FiniteType::B(n) => n >= 2,
            FiniteType::D(n) => n >= 4,
            FiniteType::I2(m) => m >= 5,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(CatalogError::IllegalType(self.to_string()))
        }
    }

    pub fn rank(self) -> u32 {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) => n,
            FiniteType::E6 => 6,
            FiniteType::E7 => 7,
            FiniteType::E8 => 8,
            FiniteType::F4 | FiniteType::H4 => 4,
            FiniteType::H3 => 3,
            FiniteType::I2(_) => 2,
        }
    }

    /// Degrees of the basic invariants; the Solomon series is their bracket.
    pub fn degrees(self) -> Vec<u64> {
        match self {
            FiniteType::A(n) => (2..=n as u64 + 1).collect(),
            FiniteType::B(n) => (1..=n as u64).map(|k| 2 * k).collect(),
            FiniteType::D(n) => {
                let mut d: Vec<u64> = (1..n as u64).map(|k| 2 * k).collect();
                d.push(n as u64);
                d.sort_unstable();
                d
            }
            FiniteType::E6 => vec![2, 5, 6, 8, 9, 12],
            FiniteType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            FiniteType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            FiniteType::F4 => vec![2, 6, 8, 12],
            FiniteType::H3 => vec![2, 6, 10],
            FiniteType::H4 => vec![2, 12, 20, 30],
            FiniteType::I2(m) => vec![2, m as u64],
        }
    }

    pub fn solomon_series(self) -> IntPolynomial {
        IntPolynomial::bracket(&self.degrees()).expect("degrees are positive")
    }

    pub fn solomon_factors(self) -> CyclotomicProduct {
        CyclotomicProduct::bracket(&self.degrees()).expect("degrees are positive")
    }

    /// Number of reflections, i.e. the degree of the Solomon series.
    pub fn length_of_longest(self) -> u64 {
        self.degrees().iter().map(|d| d - 1).sum()
    }

    pub fn order(self) -> BigInt {
        self.degrees().iter().map(|&d| BigInt::from(d)).product()
    }

    pub fn diagram_description(self) -> String {
        match self {
            FiniteType::A(n) => format!("path of {n} vertices, all labels 3"),
            FiniteType::B(n) => format!("path of {n} vertices, label 4 on an end edge"),
            FiniteType::D(n) => format!("{n} vertices, one branch vertex with arms 1,1,{}", n - 3),
            FiniteType::E6 => "one branch vertex with arms 1,2,2".into(),
            FiniteType::E7 => "one branch vertex with arms 1,2,3".into(),
            FiniteType::E8 => "one branch vertex with arms 1,2,4".into(),
            FiniteType::F4 => "path of 4 vertices, label 4 on the middle edge".into(),
            FiniteType::H3 => "path of 3 vertices, label 5 on an end edge".into(),
            FiniteType::H4 => "path of 4 vertices, label 5 on an end edge".into(),
            FiniteType::I2(m) => format!("two vertices joined by label {m}"),
        }
    }

    /// All catalog types of rank at most `max_rank`, with dihedral labels
    /// `5..=max_dihedral`.
    pub fn catalog(max_rank: u32, max_dihedral: u32) -> Vec<FiniteType> {
        let mut out = Vec::new();
        out.extend((1..=max_rank).map(FiniteType::A));
        out.extend((2..=max_rank).map(FiniteType::B));
        out.extend((4..=max_rank).map(FiniteType::D));
        for t in [
            FiniteType::E6,
            FiniteType::E7,
            FiniteType::E8,
            FiniteType::F4,
            FiniteType::H3,
            FiniteType::H4,
        ] {
            if t.rank() <= max_rank {
                out.push(t);
            }
        }
        if max_rank >= 2 {
            out.extend((5..=max_dihedral).map(FiniteType::I2));
        }
        out
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E6 => f.write_str("E6"),
            FiniteType::E7 => f.write_str("E7"),
            FiniteType::E8 => f.write_str("E8"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::H3 => f.write_str("H3"),
            FiniteType::H4 => f.write_str("H4"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// One row of the catalog dump.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub label: String,
    pub diagram: String,
    pub bracket: Vec<u64>,
    pub degree: u64,
    pub order: String,
}

impl From<FiniteType> for CatalogEntry {
    fn from(t: FiniteType) -> Self {
        CatalogEntry {
            label: t.to_string(),
            diagram: t.diagram_description(),
            bracket: t.degrees(),
            degree: t.length_of_longest(),
            order: t.order().to_string(),
        }
    }
}

fn check_subset(m: &CoxeterMatrix, t: GeneratorSet) -> Result<(), CatalogError> {
    match t.max_element() {
        Some(i) if i >= m.rank() => Err(CatalogError::IndexOutOfRange {
            index: i,
            rank: m.rank(),
        }),
        _ => Ok(()),
    }
}

/// Vertex sets of the connected components of the diagram on `t`.
pub fn irreducible_components(
    m: &CoxeterMatrix,
    t: GeneratorSet,
) -> Result<Vec<GeneratorSet>, CatalogError> {
    check_subset(m, t)?;
    Ok(components(m, t))
}

/// Finite type of a connected diagram component, or `None` if the parabolic
/// subgroup it generates is infinite.
pub fn recognize_irreducible(
    m: &CoxeterMatrix,
    component: GeneratorSet,
) -> Result<Option<FiniteType>, CatalogError> {
    check_subset(m, component)?;
    if component.is_empty() {
        return Err(CatalogError::EmptyComponent);
    }
    if components(m, component).len() != 1 {
        return Err(CatalogError::Disconnected(component));
    }
    Ok(recognize_connected(&LocalDiagram::new(m, component)))
}

fn recognize_connected(g: &LocalDiagram) -> Option<FiniteType> {
    let n = g.len() as u32;
    if n == 1 {
        return Some(FiniteType::A(1));
    }
    if g.labels().any(CoxLabel::is_infinite) || !g.is_tree() {
        return None;
    }
    if let Some(labels) = g.path_labels() {
        return recognize_path(&labels);
    }
    let branch = g.vertices_of_degree(3);
    if g.max_degree() > 3 || branch.len() != 1 || g.labels().any(|l| l != CoxLabel::Finite(3)) {
        return None;
    }
    let mut lens: Vec<usize> = g.arms(branch[0])?.iter().map(Vec::len).collect();
    lens.sort_unstable();
    match lens.as_slice() {
        [1, 1, r] => Some(FiniteType::D(*r as u32 + 3)),
        [1, 2, 2] => Some(FiniteType::E6),
        [1, 2, 3] => Some(FiniteType::E7),
        [1, 2, 4] => Some(FiniteType::E8),
        _ => None,
    }
}

fn recognize_path(labels: &[CoxLabel]) -> Option<FiniteType> {
    let n = labels.len() as u32 + 1;
    let values: Vec<u32> = labels.iter().map(|l| l.value().expect("finite")).collect();
    if n == 2 {
        return FiniteType::dihedral(values[0]).ok();
    }
    let heavy: Vec<(usize, u32)> = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= 4)
        .map(|(i, &v)| (i, v))
        .collect();
    let last = labels.len() - 1;
    match heavy.as_slice() {
        [] => Some(FiniteType::A(n)),
        [(p, 4)] if *p == 0 || *p == last => Some(FiniteType::B(n)),
        [(1, 4)] if n == 4 => Some(FiniteType::F4),
        [(p, 5)] if *p == 0 || *p == last => match n {
            3 => Some(FiniteType::H3),
            4 => Some(FiniteType::H4),
            _ => None,
        },
        _ => None,
    }
}

/// Decomposition of `t` into irreducible finite types, or the first
/// infinite component.
pub fn decompose(
    m: &CoxeterMatrix,
    t: GeneratorSet,
) -> Result<Vec<(GeneratorSet, FiniteType)>, CatalogError> {
    check_subset(m, t)?;
    components(m, t)
        .into_iter()
        .map(|c| match recognize_connected(&LocalDiagram::new(m, c)) {
            Some(ft) => Ok((c, ft)),
            None => Err(CatalogError::NotFinite(c)),
        })
        .collect()
}

pub fn is_finite_subset(m: &CoxeterMatrix, t: GeneratorSet) -> Result<bool, CatalogError> {
    match decompose(m, t) {
        Ok(_) => Ok(true),
        Err(CatalogError::NotFinite(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Growth polynomial of the finite parabolic subgroup on `t`: the product
/// of the Solomon series of its components.
pub fn growth_poly_of_finite(
    m: &CoxeterMatrix,
    t: GeneratorSet,
) -> Result<IntPolynomial, CatalogError> {
    let parts = decompose(m, t)?;
    Ok(parts.iter().fold(IntPolynomial::one(), |acc, (_, ft)| {
        &acc * &ft.solomon_series()
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicMember {
    pub set: GeneratorSet,
    pub components: Vec<(GeneratorSet, FiniteType)>,
    /// Degree of the growth polynomial, the length of the longest element.
    pub degree: u64,
}

impl ParabolicMember {
    pub fn growth_polynomial(&self) -> IntPolynomial {
        IntPolynomial::bracket(&self.degrees()).expect("degrees are positive")
    }

    pub fn factors(&self) -> CyclotomicProduct {
        CyclotomicProduct::bracket(&self.degrees()).expect("degrees are positive")
    }

    /// Concatenated invariant degrees of all components.
    pub fn degrees(&self) -> Vec<u64> {
        self.components
            .iter()
            .flat_map(|(_, t)| t.degrees())
            .collect()
    }

    pub fn type_name(&self) -> String {
        if self.components.is_empty() {
            return "1".into();
        }
        let names: Vec<String> = self.components.iter().map(|(_, t)| t.to_string()).collect();
        names.join("×")
    }
}

/// The downward-closed family of subsets generating finite parabolic
/// subgroups, ordered by cardinality and then lexicographically.
#[derive(Clone, Debug)]
pub struct ParabolicFamily {
    rank: usize,
    members: Vec<ParabolicMember>,
    index: HashMap<GeneratorSet, usize>,
}

impl ParabolicFamily {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn members(&self) -> &[ParabolicMember] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: GeneratorSet) -> bool {
        self.index.contains_key(&t)
    }

    pub fn get(&self, t: GeneratorSet) -> Option<&ParabolicMember> {
        self.index.get(&t).map(|&i| &self.members[i])
    }

    pub fn sets(&self) -> impl Iterator<Item = GeneratorSet> + '_ {
        self.members.iter().map(|m| m.set)
    }

    /// Whether the whole generating set is a member, i.e. the group is finite.
    pub fn contains_full(&self) -> bool {
        self.contains(GeneratorSet::full(self.rank))
    }
}

/// Enumerates the finite parabolic family level by level; a subset is
/// examined only when all its maximal proper subsets are already members.
pub fn enumerate_finite_subsets(m: &CoxeterMatrix) -> Result<ParabolicFamily, CatalogError> {
    let n = m.rank();
    if n > MAX_ENUMERATION_RANK {
        return Err(CatalogError::RankTooLarge(n));
    }
    let mut members = vec![ParabolicMember {
        set: GeneratorSet::EMPTY,
        components: Vec::new(),
        degree: 0,
    }];
    let mut index = HashMap::from([(GeneratorSet::EMPTY, 0)]);
    let mut level = vec![GeneratorSet::EMPTY];
    while !level.is_empty() {
        let mut next = Vec::new();
        for t in level {
            let start = t.max_element().map_or(0, |i| i + 1);
            for j in start..n {
                let u = t.with(j);
                if !u.iter().all(|i| index.contains_key(&u.without(i))) {
                    continue;
                }
                let Ok(parts) = decompose(m, u) else { continue };
                let degree = parts.iter().map(|(_, t)| t.length_of_longest()).sum();
                index.insert(u, members.len());
                members.push(ParabolicMember {
                    set: u,
                    components: parts,
                    degree,
                });
                next.push(u);
            }
        }
        level = next;
    }
    Ok(ParabolicFamily {
        rank: n,
        members,
        index,
    })
}

/// Members of the finite parabolic family whose diagram has an edge with
/// label exactly `label`.
pub fn finite_subsets_with_label(
    m: &CoxeterMatrix,
    label: CoxLabel,
) -> Result<Vec<GeneratorSet>, CatalogError> {
    let family = enumerate_finite_subsets(m)?;
    subsets_with_label(m, &family, label)
}

pub fn subsets_with_label(
    m: &CoxeterMatrix,
    family: &ParabolicFamily,
    label: CoxLabel,
) -> Result<Vec<GeneratorSet>, CatalogError> {
    match label.value() {
        Some(v) if v >= 4 => {}
        _ => return Err(CatalogError::UnmarkedLabel(label)),
    }
    Ok(family
        .sets()
        .filter(|t| {
            let v: Vec<usize> = t.iter().collect();
            v.iter()
                .enumerate()
                .any(|(a, &i)| v[a + 1..].iter().any(|&j| m.get(i, j) == label))
        })
        .collect())
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

    fn star(arms: &[usize]) -> CoxeterMatrix {
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
    }

    fn whole(m: &CoxeterMatrix) -> Option<FiniteType> {
        recognize_irreducible(m, GeneratorSet::full(m.rank())).unwrap()
    }

    fn triangle_237() -> CoxeterMatrix {
        CoxeterMatrix::polygon(&[lab(2), lab(3), lab(7)]).unwrap()
    }

    #[test]
    fn recognizes_paths() {
        assert_eq!(
            whole(&CoxeterMatrix::new(1).unwrap()),
            Some(FiniteType::A(1))
        );
        assert_eq!(whole(&path(&[lab(5)])), Some(FiniteType::I2(5)));
        assert_eq!(whole(&path(&[lab(3)])), Some(FiniteType::A(2)));
        assert_eq!(whole(&path(&[lab(4)])), Some(FiniteType::B(2)));
        assert_eq!(whole(&path(&[lab(3), lab(4)])), Some(FiniteType::B(3)));
        assert_eq!(
            whole(&path(&[lab(4), lab(3), lab(3)])),
            Some(FiniteType::B(4))
        );
        assert_eq!(
            whole(&path(&[lab(3), lab(4), lab(3)])),
            Some(FiniteType::F4)
        );
        assert_eq!(whole(&path(&[lab(5), lab(3)])), Some(FiniteType::H3));
        assert_eq!(
            whole(&path(&[lab(3), lab(3), lab(5)])),
            Some(FiniteType::H4)
        );
        assert_eq!(whole(&path(&[lab(3); 6])), Some(FiniteType::A(7)));
        assert_eq!(whole(&path(&[lab(3), lab(5), lab(3)])), None);
        assert_eq!(whole(&path(&[lab(3), lab(3), lab(3), lab(5)])), None);
        assert_eq!(whole(&path(&[lab(4), lab(4)])), None);
        assert_eq!(whole(&path(&[lab(3), lab(6)])), None);
        assert_eq!(whole(&path(&[CoxLabel::Infinity])), None);
    }

    #[test]
    fn recognizes_branched() {
        assert_eq!(whole(&star(&[1, 1, 1])), Some(FiniteType::D(4)));
        assert_eq!(whole(&star(&[1, 1, 4])), Some(FiniteType::D(7)));
        assert_eq!(whole(&star(&[1, 2, 2])), Some(FiniteType::E6));
        assert_eq!(whole(&star(&[2, 3, 1])), Some(FiniteType::E7));
        assert_eq!(whole(&star(&[4, 2, 1])), Some(FiniteType::E8));
        assert_eq!(whole(&star(&[2, 2, 2])), None);
        assert_eq!(whole(&star(&[1, 2, 5])), None);
        assert_eq!(whole(&star(&[1, 1, 1, 1])), None);
        let cycle = CoxeterMatrix::polygon(&[lab(3); 3]).unwrap();
        let cycle = cycle.with(0, 2, lab(3)).unwrap();
        assert_eq!(whole(&cycle), None);
    }

    #[test]
    fn recognition_errors() {
        let m = CoxeterMatrix::new(3).unwrap();
        assert_eq!(
            recognize_irreducible(&m, GeneratorSet::full(2)),
            Err(CatalogError::Disconnected(GeneratorSet::full(2)))
        );
        assert!(matches!(
            recognize_irreducible(&m, GeneratorSet::singleton(3)),
            Err(CatalogError::IndexOutOfRange { index: 3, rank: 3 })
        ));
    }

    #[test]
    fn components_examples() {
        let m = CoxeterMatrix::new(3).unwrap();
        let c = irreducible_components(&m, GeneratorSet::full(3)).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(
            irreducible_components(&triangle_237(), GeneratorSet::full(3))
                .unwrap()
                .len(),
            1
        );
        assert!(irreducible_components(&m, GeneratorSet::EMPTY)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn solomon_examples() {
        assert_eq!(
            FiniteType::A(3).solomon_series(),
            IntPolynomial::bracket(&[2, 3, 4]).unwrap()
        );
        assert_eq!(FiniteType::H4.degrees(), vec![2, 12, 20, 30]);
        assert_eq!(FiniteType::I2(7).degrees(), vec![2, 7]);
        assert_eq!(FiniteType::D(4).degrees(), vec![2, 4, 4, 6]);
        assert_eq!(FiniteType::E8.order(), BigInt::from(696_729_600u64));
        assert_eq!(FiniteType::H4.order(), BigInt::from(14_400));
        assert_eq!(FiniteType::E6.length_of_longest(), 36);
        for t in FiniteType::catalog(8, 12) {
            assert_eq!(
                t.solomon_series().degree(),
                Some(t.length_of_longest() as usize)
            );
            assert_eq!(t.solomon_series().eval_integer(&BigInt::from(1)), t.order());
            assert_eq!(t.degrees().len() as u32, t.rank());
            assert!(t.validate().is_ok());
        }
    }

    #[test]
    fn growth_poly_examples() {
        let m = CoxeterMatrix::new(2).unwrap();
        assert_eq!(
            growth_poly_of_finite(&m, GeneratorSet::EMPTY).unwrap(),
            IntPolynomial::one()
        );
        let z1 = IntPolynomial::from_i64s(&[1, 1]);
        assert_eq!(
            growth_poly_of_finite(&m, GeneratorSet::singleton(0)).unwrap(),
            z1
        );
        assert_eq!(
            growth_poly_of_finite(&m, GeneratorSet::full(2)).unwrap(),
            &z1 * &z1
        );
        let inf = CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap();
        assert!(matches!(
            growth_poly_of_finite(&inf, GeneratorSet::full(2)),
            Err(CatalogError::NotFinite(_))
        ));
    }

    #[test]
    fn enumeration_examples() {
        let f = enumerate_finite_subsets(&triangle_237()).unwrap();
        assert_eq!(f.len(), 7);
        assert!(!f.contains_full());
        let inf = CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap();
        let sets: Vec<_> = enumerate_finite_subsets(&inf).unwrap().sets().collect();
        assert_eq!(
            sets,
            vec![
                GeneratorSet::EMPTY,
                GeneratorSet::singleton(0),
                GeneratorSet::singleton(1)
            ]
        );
        assert_eq!(
            enumerate_finite_subsets(&CoxeterMatrix::new(1).unwrap())
                .unwrap()
                .len(),
            2
        );
        // A3: every subset is finite
        let a3 = path(&[lab(3), lab(3)]);
        let f = enumerate_finite_subsets(&a3).unwrap();
        assert_eq!(f.len(), 8);
        assert_eq!(f.get(GeneratorSet::full(3)).unwrap().degree, 6);
        let big = CoxeterMatrix::new(26).unwrap();
        assert_eq!(
            enumerate_finite_subsets(&big).unwrap_err(),
            CatalogError::RankTooLarge(26)
        );
    }

    #[test]
    fn labeled_subfamily_examples() {
        let t = triangle_237();
        let s7 = finite_subsets_with_label(&t, lab(7)).unwrap();
        assert_eq!(s7, vec![GeneratorSet::from_bits(0b101)]);
        assert!(finite_subsets_with_label(&t, lab(5)).unwrap().is_empty());
        let d = CoxeterMatrix::uniform(3, CoxLabel::Infinity)
            .unwrap()
            .deform(6)
            .unwrap();
        assert_eq!(finite_subsets_with_label(&d, lab(6)).unwrap().len(), 3);
        assert_eq!(
            finite_subsets_with_label(&t, lab(3)).unwrap_err(),
            CatalogError::UnmarkedLabel(lab(3))
        );
    }
}
