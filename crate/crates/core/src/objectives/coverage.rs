use crate::element::ElementId;
use crate::family::SetFunction;

/// Set cover size: each element covers a subset of a finite universe and
/// `f(A)` counts the covered items.
#[derive(Clone, Debug)]
pub struct Coverage {
    words: usize,
    masks: Vec<Vec<u64>>,
}

impl Coverage {
    /// `covers[e]` lists the universe items element `e` covers.
    pub fn new(universe: usize, covers: &[Vec<usize>]) -> Self {
        let words = universe.div_ceil(64).max(1);
        let masks = covers
            .iter()
            .map(|items| {
                let mut m = vec![0u64; words];
                for &it in items {
                    assert!(it < universe, "coverage item {it} outside universe {universe}");
                    m[it / 64] |= 1 << (it % 64);
                }
                m
            })
            .collect();
        Coverage { words, masks }
    }
}

impl SetFunction for Coverage {
    fn value(&self, set: &[ElementId]) -> f64 {
        let mut acc = vec![0u64; self.words];
        for e in set {
            for (a, m) in acc.iter_mut().zip(&self.masks[e.index()]) {
                *a |= m;
            }
        }
        acc.iter().map(|w| w.count_ones()).sum::<u32>() as f64
    }

    fn name(&self) -> &str {
        "coverage"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_union() {
        let c = Coverage::new(70, &[vec![0, 1, 65], vec![1, 2], vec![]]);
        assert_eq!(c.value(&[ElementId(0), ElementId(1)]), 4.0);
        assert_eq!(c.value(&[ElementId(2)]), 0.0);
        assert_eq!(c.value(&[]), 0.0);
    }
}
