use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::combing::crossing_counts;

/// Component structure of a braid closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureComponents {
    pub count: usize,
    /// `component_of[s - 1]` is the component (0-based) containing strand `s`.
    pub component_of: Vec<usize>,
}

pub fn closure_components(b: &BraidWord) -> ClosureComponents {
    let cycles = b.permutation().cycles();
    let mut component_of = vec![0; b.strands()];
    for (c, cycle) in cycles.iter().enumerate() {
        for &s in cycle {
            component_of[s - 1] = c;
        }
    }
    ClosureComponents {
        count: cycles.len(),
        component_of,
    }
}

pub fn is_knot(b: &BraidWord) -> bool {
    b.permutation().is_full_cycle()
}

/// Symmetric matrix of pairwise linking numbers, indexed by component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkingMatrix(pub Vec<Vec<i64>>);

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.0[a][b]
    }
}

pub fn linking_matrix(b: &BraidWord) -> LinkingMatrix {
    let comps = closure_components(b);
    let n = comps.count;
    let mut twice = vec![vec![0i64; n]; n];
    for ((s, t), c) in crossing_counts(b) {
        let (x, y) = (comps.component_of[s - 1], comps.component_of[t - 1]);
        if x != y {
            twice[x][y] += c;
            twice[y][x] += c;
        }
    }
    LinkingMatrix(
        twice
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| {
                        debug_assert!(v % 2 == 0);
                        v / 2
                    })
                    .collect()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{pure_gen, shift_braid, PureGenSpec};

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn component_counts() {
        assert_eq!(closure_components(&w("B3")).count, 3);
        assert_eq!(closure_components(&w("B2 1")).count, 1);
        let p = pure_gen(PureGenSpec::new(1, 3), 4).unwrap();
        assert!(is_knot(&p.compose(&shift_braid(4)).unwrap()));
    }

    #[test]
    fn hopf_and_unlink() {
        assert_eq!(
            linking_matrix(&w("B2")),
            LinkingMatrix(vec![vec![0, 0], vec![0, 0]])
        );
        assert_eq!(
            linking_matrix(&w("B2 1 1")),
            LinkingMatrix(vec![vec![0, 1], vec![1, 0]])
        );
        assert_eq!(linking_matrix(&w("B2 -1 -1")).get(0, 1), -1);
        // three components, strands 1 and 3 linked twice
        let m = linking_matrix(&w("B3 2 1 1 -2 2 1 1 -2"));
        assert_eq!(m.get(0, 2), 2);
        assert_eq!(m.get(0, 1), 0);
    }
}
