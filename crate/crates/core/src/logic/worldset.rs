use std::fmt;

use super::World;

/// A set of worlds, stored as a dense bitset over world indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WorldSet {
    len: usize,
    words: Vec<u64>,
}

impl WorldSet {
    pub fn empty(len: usize) -> Self {
        WorldSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut set = WorldSet {
            len,
            words: vec![u64::MAX; len.div_ceil(64)],
        };
        set.trim();
        set
    }

    pub fn from_worlds<I: IntoIterator<Item = World>>(len: usize, worlds: I) -> Self {
        let mut set = Self::empty(len);
        for w in worlds {
            set.insert(w);
        }
        set
    }

    /// Worlds (over a universe of `len`) in which atom `atom` is true.
    pub fn atom(len: usize, atom: usize) -> Self {
        const PATTERNS: [u64; 6] = [
            0xAAAA_AAAA_AAAA_AAAA,
            0xCCCC_CCCC_CCCC_CCCC,
            0xF0F0_F0F0_F0F0_F0F0,
            0xFF00_FF00_FF00_FF00,
            0xFFFF_0000_FFFF_0000,
            0xFFFF_FFFF_0000_0000,
        ];
        let mut set = Self::empty(len);
        for (k, word) in set.words.iter_mut().enumerate() {
            *word = if atom < 6 {
                PATTERNS[atom]
            } else if (k >> (atom - 6)) & 1 == 1 {
                u64::MAX
            } else {
                0
            };
        }
        set.trim();
        set
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the universe (number of worlds in `V`).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, w: World) {
        let i = w.index();
        assert!(i < self.len, "world {i} outside universe of {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, w: World) {
        let i = w.index();
        if i < self.len {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn contains(&self, w: World) -> bool {
        let i = w.index();
        i < self.len && (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &WorldSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &WorldSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn and(&self, other: &WorldSet) -> WorldSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn or(&self, other: &WorldSet) -> WorldSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn minus(&self, other: &WorldSet) -> WorldSet {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement relative to the universe.
    pub fn complement(&self) -> WorldSet {
        let mut set = WorldSet {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        set.trim();
        set
    }

    fn zip_with(&self, other: &WorldSet, op: impl Fn(u64, u64) -> u64) -> WorldSet {
        debug_assert_eq!(self.len, other.len, "world sets over different universes");
        WorldSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    /// Worlds in ascending index order.
    pub fn iter(&self) -> WorldSetIter<'_> {
        WorldSetIter {
            words: &self.words,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<World> {
        self.iter().next()
    }
}

impl fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(World::index)).finish()
    }
}

impl<'a> IntoIterator for &'a WorldSet {
    type Item = World;
    type IntoIter = WorldSetIter<'a>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

pub struct WorldSetIter<'a> {
    words: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for WorldSetIter<'_> {
    type Item = World;

    fn next(&mut self) -> Option<World> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(World::from_index(self.word * 64 + tz));
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.bits = self.words[self.word];
        }
    }
}
