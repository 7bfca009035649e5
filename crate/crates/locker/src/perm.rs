//! Permutations, placements and colourings.
//!
//! The referee's hidden state is a map from slip labels to lockers. In the
//! standard game it is a permutation of `{1..n}`; with empty lockers it is an
//! injection into `{1..b}`. Indices are 1-based throughout, matching the
//! usual statement of the puzzle.

use crate::{Error, Result};

/// A permutation of `{1..n}`. `apply(i)` is the locker holding label `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Build from a 1-based mapping: `map[i-1]` is the image of `i`.
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty mapping".into()));
        }
        let mut seen = vec![false; n];
        for &v in &map {
            if v < 1 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} outside [1, {n}]"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects n = 0
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn invert(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { map: inv }
    }

    /// Composition `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::InvalidPermutation(format!(
                "size mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Self {
            map: (1..=self.len()).map(|i| self.apply(other.apply(i))).collect(),
        })
    }

    /// Disjoint cycles, each starting at its minimum element, sorted by that
    /// minimum. Scanning upwards makes both properties fall out directly.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !visited[cur - 1] {
                visited[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn longest_cycle(&self) -> usize {
        self.cycles().iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// An injective assignment of `n` labels to `b ≥ n` lockers; the other
/// `b − n` lockers are empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    b: usize,
    slot: Vec<usize>,           // slot[i-1] = locker of label i
    occupant: Vec<Option<usize>>, // occupant[x-1] = label in locker x
}

impl Placement {
    pub fn new(b: usize, slot: Vec<usize>) -> Result<Self> {
        let n = slot.len();
        if n == 0 {
            return Err(Error::InvalidPlacement("no labels".into()));
        }
        if b < n {
            return Err(Error::InvalidPlacement(format!(
                "{b} lockers cannot hold {n} labels"
            )));
        }
        let mut occupant = vec![None; b];
        for (i, &x) in slot.iter().enumerate() {
            if x < 1 || x > b {
                return Err(Error::InvalidPlacement(format!(
                    "locker {x} outside [1, {b}]"
                )));
            }
            if occupant[x - 1].is_some() {
                return Err(Error::InvalidPlacement(format!("locker {x} used twice")));
            }
            occupant[x - 1] = Some(i + 1);
        }
        Ok(Self { b, slot, occupant })
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        Self::new(p.len(), p.as_slice().to_vec()).expect("permutation is a valid placement")
    }

    pub fn n(&self) -> usize {
        self.slot.len()
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Locker holding label `i`.
    pub fn slot(&self, i: usize) -> usize {
        self.slot[i - 1]
    }

    /// Label inside locker `x`, if any.
    pub fn occupant(&self, x: usize) -> Option<usize> {
        self.occupant[x - 1]
    }

    /// With `b = n` every locker is occupied and this is a permutation.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if self.b == self.n() {
            Some(Permutation::new(self.slot.clone()).expect("injective onto itself"))
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    Red,
    Blue,
}

impl std::fmt::Display for Colour {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Colour::Red => write!(f, "red"),
            Colour::Blue => write!(f, "blue"),
        }
    }
}

/// A colour for each slip label in `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<Colour>,
}

impl Colouring {
    pub fn new(colours: Vec<Colour>) -> Result<Self> {
        if colours.is_empty() {
            return Err(Error::Config("empty colouring".into()));
        }
        Ok(Self { colours })
    }

    pub fn uniform(n: usize, colour: Colour) -> Self {
        Self {
            colours: vec![colour; n],
        }
    }

    pub fn n(&self) -> usize {
        self.colours.len()
    }

    pub fn colour(&self, label: usize) -> Colour {
        self.colours[label - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_identity() {
        let p = Permutation::identity(5);
        assert_eq!(p.invert(), p);
    }

    #[test]
    fn invert_three_cycle() {
        // σ(1)=2, σ(2)=3, σ(3)=1 inverts to (3,1,2).
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        let q = p.invert();
        assert_eq!(q.as_slice(), &[3, 1, 2]);
        for i in 1..=3 {
            assert_eq!(q.apply(p.apply(i)), i);
        }
    }

    #[test]
    fn transposition_is_self_inverse() {
        let p = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(p.invert(), p);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
    }

    #[test]
    fn cycles_of_identity() {
        let cycles = Permutation::identity(4).cycles();
        assert_eq!(cycles, vec![vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn single_four_cycle() {
        let p = Permutation::new(vec![2, 3, 4, 1]).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 2, 3, 4]]);
        assert_eq!(p.longest_cycle(), 4);
    }

    #[test]
    fn two_transpositions() {
        let p = Permutation::new(vec![2, 1, 4, 3]).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(p.longest_cycle(), 2);
    }

    #[test]
    fn longest_cycle_identity() {
        assert_eq!(Permutation::identity(6).longest_cycle(), 1);
    }

    #[test]
    fn placement_degenerate_is_permutation() {
        let p = Permutation::new(vec![3, 1, 2]).unwrap();
        let pl = Placement::from_permutation(&p);
        assert_eq!(pl.to_permutation().unwrap(), p);
        for i in 1..=3 {
            assert_eq!(pl.occupant(pl.slot(i)), Some(i));
        }
    }

    #[test]
    fn placement_tracks_empty_lockers() {
        let pl = Placement::new(4, vec![2, 4]).unwrap();
        assert_eq!(pl.occupant(1), None);
        assert_eq!(pl.occupant(2), Some(1));
        assert_eq!(pl.occupant(3), None);
        assert_eq!(pl.occupant(4), Some(2));
        assert!(pl.to_permutation().is_none());
        let empties = (1..=4).filter(|&x| pl.occupant(x).is_none()).count();
        assert_eq!(empties, pl.b() - pl.n());
    }

    #[test]
    fn placement_rejects_collisions_and_overflow() {
        assert!(Placement::new(3, vec![1, 1]).is_err());
        assert!(Placement::new(2, vec![1, 2, 2]).is_err());
        assert!(Placement::new(3, vec![4]).is_err());
    }
}
