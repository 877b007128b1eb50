use crate::{CircuitError, Result};

/// A bijection from logical qubits to physical lines, `map[logical] = physical`
/// (both 1-based).
///
/// Line-ordering tuples `{q_1, q_2, ..., q_n}` are read as "physical
/// line `i` holds logical qubit `q_i`"; see [`Permutation::from_line_contents`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// The identity on `{1..n}`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (1..=n).collect(),
        }
    }

    /// Builds from `map[logical-1] = physical`, validating bijectivity.
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &p in &map {
            if p == 0 || p > n || seen[p - 1] {
                return Err(CircuitError::NonBijectivePermutation { map, n });
            }
            seen[p - 1] = true;
        }
        Ok(Permutation { map })
    }

    /// Builds from an ordering tuple: `contents[physical-1] = logical`.
    pub fn from_line_contents(contents: &[usize]) -> Result<Self> {
        let n = contents.len();
        let mut map = vec![0usize; n];
        for (phys0, &logical) in contents.iter().enumerate() {
            if logical == 0 || logical > n || map[logical - 1] != 0 {
                return Err(CircuitError::NonBijectivePermutation {
                    map: contents.to_vec(),
                    n,
                });
            }
            map[logical - 1] = phys0 + 1;
        }
        Ok(Permutation { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Physical line of logical qubit `logical` (1-based).
    pub fn apply(&self, logical: usize) -> usize {
        self.map[logical - 1]
    }

    /// The raw map, `map[logical-1] = physical`.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// The ordering tuple: `contents[physical-1] = logical`.
    pub fn line_contents(&self) -> Vec<usize> {
        let n = self.map.len();
        let mut contents = vec![0usize; n];
        for (logical0, &phys) in self.map.iter().enumerate() {
            contents[phys - 1] = logical0 + 1;
        }
        contents
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            map: self.line_contents(),
        }
    }

    /// Composition "apply `self` then `other`": result(q) = other(self(q)).
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(CircuitError::PermutationLengthMismatch {
                len: other.len(),
                width: self.len(),
            });
        }
        Ok(Permutation {
            map: self.map.iter().map(|&p| other.apply(p)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// Number of inversions of the ordering tuple; equals the minimal number
    /// of adjacent transpositions needed to sort the lines back to identity.
    pub fn inversions(&self) -> usize {
        let c = self.line_contents();
        let mut count = 0;
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                if c[i] > c[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_inverse() {
        let p = Permutation::from_map(vec![2, 3, 1]).unwrap();
        let inv = p.inverse();
        assert!(p.then(&inv).unwrap().is_identity());
        assert!(inv.then(&p).unwrap().is_identity());
        assert!(Permutation::identity(4).is_identity());
    }

    #[test]
    fn non_bijective_rejected() {
        assert!(Permutation::from_map(vec![1, 1, 3]).is_err());
        assert!(Permutation::from_map(vec![0, 2, 3]).is_err());
        assert!(Permutation::from_map(vec![1, 2, 4]).is_err());
    }

    #[test]
    fn line_contents_round_trip() {
        // Tuple {1, 4, 3, 2}: line 2 holds qubit 4, line 4 holds qubit 2.
        let p = Permutation::from_line_contents(&[1, 4, 3, 2]).unwrap();
        assert_eq!(p.apply(4), 2);
        assert_eq!(p.apply(2), 4);
        assert_eq!(p.line_contents(), vec![1, 4, 3, 2]);
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(Permutation::identity(5).inversions(), 0);
        // Cyclic tuple {2,3,4,5,1}: qubit 1 must travel from line 5 to line 1.
        let p = Permutation::from_line_contents(&[2, 3, 4, 5, 1]).unwrap();
        assert_eq!(p.inversions(), 4);
        // Full reversal: n(n-1)/2 inversions.
        let r = Permutation::from_line_contents(&[4, 3, 2, 1]).unwrap();
        assert_eq!(r.inversions(), 6);
    }
}
