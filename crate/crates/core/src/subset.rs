use std::fmt;

/// A subset of the generators `{0, …, 63}` stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet(u64);

pub const MAX_GENERATORS: usize = 64;

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS);
        if n == MAX_GENERATORS {
            GeneratorSet(u64::MAX)
        } else {
            GeneratorSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        GeneratorSet(1u64 << i)
    }

    pub fn from_bits(bits: u64) -> Self {
        GeneratorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GENERATORS && self.0 & (1u64 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        GeneratorSet(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        GeneratorSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GeneratorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GeneratorSet) -> Self {
        GeneratorSet(self.0 | other.0)
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for GeneratorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(GeneratorSet::EMPTY, |s, i| s.with(i))
    }
}

/// Renders 1-based, e.g. `{1,3}`.
impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
