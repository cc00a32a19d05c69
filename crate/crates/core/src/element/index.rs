use std::cmp::Ordering;
use std::fmt;

/// Maximum number of generators: a subset of `[n]` must fit in one `u64`.
pub const MAX_GENERATORS: usize = 63;

/// A subset `I` of `{1, ..., n}` used as a multi-index for the blade `z_I`.
///
/// Bit `i - 1` is set when generator `z_i` is present. The empty set is the
/// unit blade `z_{} = 1`.
///
/// Ordering is by grade first, then lexicographic on the sorted index lists,
/// so `{} < {1} < {2} < {1,2} < {1,3} < {2,3} < {1,2,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetIndex(u64);

impl SubsetIndex {
    pub const EMPTY: SubsetIndex = SubsetIndex(0);

    pub const fn from_bits(bits: u64) -> Self {
        SubsetIndex(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds the index from 1-based generator numbers. Duplicates collapse.
    ///
    /// Panics if an index is 0 or exceeds [`MAX_GENERATORS`].
    pub fn from_generators(generators: &[usize]) -> Self {
        let mut bits = 0u64;
        for &g in generators {
            assert!(
                (1..=MAX_GENERATORS).contains(&g),
                "generator index {g} out of range 1..={MAX_GENERATORS}"
            );
            bits |= 1 << (g - 1);
        }
        SubsetIndex(bits)
    }

    /// The full set `[n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS);
        if n == 0 {
            SubsetIndex(0)
        } else {
            SubsetIndex(u64::MAX >> (64 - n))
        }
    }

    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_disjoint(self, other: SubsetIndex) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 | other.0)
    }

    pub const fn contains(self, generator: usize) -> bool {
        generator >= 1 && generator <= MAX_GENERATORS && self.0 & (1 << (generator - 1)) != 0
    }

    /// Largest generator number present, if any.
    pub const fn max_generator(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    pub fn without(self, generator: usize) -> SubsetIndex {
        SubsetIndex(self.0 & !(1 << (generator - 1)))
    }

    /// Whether every generator lies in `1..=n`.
    pub fn fits(self, n: usize) -> bool {
        n >= MAX_GENERATORS || self.0 >> n == 0
    }

    /// Ascending 1-based generator numbers.
    pub fn generators(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i + 1)
            }
        })
    }
}

impl Ord for SubsetIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.grade().cmp(&other.grade()) {
            Ordering::Equal => {
                let diff = self.0 ^ other.0;
                if diff == 0 {
                    Ordering::Equal
                } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                    // the smallest generator in the symmetric difference is ours
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            o => o,
        }
    }
}

impl PartialOrd for SubsetIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, g) in self.generators().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}
