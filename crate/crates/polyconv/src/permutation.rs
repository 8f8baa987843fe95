//! Permutations of vertex indices and the dihedral group G_n.
//!
//! Action and composition follow the postfix convention
//! `i sigma := sigma(i)` and `i (sigma tau) := (i sigma) tau`.

use crate::error::{Error, Result};
use crate::polygon::Polygon;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Build from an explicit image list; rejects non-bijections.
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::PreconditionViolated(format!(
                    "not a bijection on 0..{n}: {map:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// The primitive cyclic shift: i -> i+1 (mod n).
    pub fn theta(n: usize) -> Self {
        Permutation {
            map: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// The reflection fixing 0: 0 -> 0, i -> n-i.
    pub fn rho(n: usize) -> Self {
        Permutation {
            map: (0..n).map(|i| if i == 0 { 0 } else { n - i }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// The image `i sigma`.
    pub fn apply_index(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// `sigma tau`, i.e. first apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                perm: other.len(),
                polygon: self.len(),
            });
        }
        Ok(Permutation {
            map: self.map.iter().map(|&i| other.map[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }
}

/// The dihedral group G_n = {theta^j rho^i}, with duplicates removed
/// (|G_1| = 1, |G_2| = 2, |G_n| = 2n for n >= 3).
pub fn dihedral_group(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return vec![Permutation::identity(0)];
    }
    let theta = Permutation::theta(n);
    let rho = Permutation::rho(n);
    let mut out: Vec<Permutation> = Vec::with_capacity(2 * n);
    let mut shift = Permutation::identity(n);
    for _ in 0..n {
        for refl in [false, true] {
            let g = if refl {
                shift.compose(&rho).unwrap()
            } else {
                shift.clone()
            };
            if !out.contains(&g) {
                out.push(g);
            }
        }
        shift = shift.compose(&theta).unwrap();
    }
    out
}

impl Polygon {
    /// `P sigma := (V_{0 sigma}, ..., V_{(n-1) sigma})`.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Polygon> {
        if sigma.len() != self.len() {
            return Err(Error::SizeMismatch {
                perm: sigma.len(),
                polygon: self.len(),
            });
        }
        Ok(Polygon::new(
            (0..self.len())
                .map(|i| self.vertices[sigma.apply_index(i)].clone())
                .collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_sizes() {
        assert_eq!(dihedral_group(1).len(), 1);
        assert_eq!(dihedral_group(2).len(), 2);
        assert_eq!(dihedral_group(3).len(), 6);
        assert_eq!(dihedral_group(4).len(), 8);
        assert_eq!(dihedral_group(7).len(), 14);
    }

    #[test]
    fn g4_elements() {
        let want: Vec<Vec<usize>> = vec![
            vec![0, 1, 2, 3],
            vec![1, 2, 3, 0],
            vec![2, 3, 0, 1],
            vec![3, 0, 1, 2],
            vec![0, 3, 2, 1],
            vec![3, 2, 1, 0],
            vec![2, 1, 0, 3],
            vec![1, 0, 3, 2],
        ];
        let mut got: Vec<Vec<usize>> = dihedral_group(4)
            .into_iter()
            .map(|g| g.as_slice().to_vec())
            .collect();
        let mut want = want;
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn theta_rho_relation() {
        // theta rho = rho theta^{-1}
        for n in 1..8 {
            let theta = Permutation::theta(n);
            let rho = Permutation::rho(n);
            let lhs = theta.compose(&rho).unwrap();
            let rhs = rho.compose(&theta.inverse()).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn closure_and_inverses() {
        let g = dihedral_group(5);
        for a in &g {
            assert!(g.contains(&a.inverse()));
            for b in &g {
                assert!(g.contains(&a.compose(b).unwrap()));
            }
        }
    }

    #[test]
    fn polygon_action() {
        let square = Polygon::from([(0, 0), (1, 0), (1, 1), (0, 1)]);
        let rotated = square.apply_permutation(&Permutation::theta(4)).unwrap();
        assert_eq!(rotated, Polygon::from([(1, 0), (1, 1), (0, 1), (0, 0)]));

        let swap = Permutation::new(vec![0, 2, 1, 3]).unwrap();
        assert_eq!(
            square.apply_permutation(&swap).unwrap(),
            Polygon::from([(0, 0), (1, 1), (1, 0), (0, 1)])
        );

        assert_eq!(
            square.apply_permutation(&Permutation::identity(4)).unwrap(),
            square
        );

        assert!(square.apply_permutation(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn action_respects_composition() {
        // (P sigma) tau = P (tau sigma): the i-th vertex of both sides is
        // V_{sigma(tau(i))} under the postfix action convention.
        let square = Polygon::from([(0, 0), (1, 0), (1, 1), (0, 1)]);
        let g = dihedral_group(4);
        for a in &g {
            for b in &g {
                let left = square
                    .apply_permutation(a)
                    .unwrap()
                    .apply_permutation(b)
                    .unwrap();
                let right = square.apply_permutation(&b.compose(a).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
    }
}
