//! Lexicographic enumeration helpers.

/// All `k`-subsets of `0..n` as ascending index vectors, in lexicographic
/// order.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let cur = self.current.as_mut().expect("checked above");
        // Rightmost position that can still move.
        match (0..k).rev().find(|&i| cur[i] < self.n - k + i) {
            Some(i) => {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Set partitions of `0..n` into at most `max_blocks` non-empty blocks,
/// encoded as restricted growth strings (`rgs[0] = 0`,
/// `rgs[i] <= 1 + max(rgs[..i])`), in lexicographic order.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    max_blocks: usize,
    current: Option<Vec<usize>>,
}

impl SetPartitions {
    pub fn new(n: usize, max_blocks: usize) -> Self {
        let current = if n == 0 {
            Some(Vec::new())
        } else if max_blocks == 0 {
            None
        } else {
            Some(vec![0; n])
        };
        Self {
            max_blocks,
            current,
        }
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let n = cur.len();
        // prefix_max[i] = max(cur[..i]) for i >= 1.
        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(cur[i - 1]);
        }
        let bump = (1..n)
            .rev()
            .find(|&i| cur[i] <= prefix_max[i] && cur[i] + 1 < self.max_blocks);
        match bump {
            Some(i) => {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 0;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_in_order() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
        for n in 0..9u64 {
            for k in 0..=n {
                assert_eq!(
                    Combinations::new(n as usize, k as usize).count() as u128,
                    binomial(n, k)
                );
            }
        }
    }

    #[test]
    fn partitions_count_matches_stirling_sums() {
        // Stirling numbers of the second kind, computed by recurrence.
        fn stirling(n: usize, k: usize) -> usize {
            match (n, k) {
                (0, 0) => 1,
                (_, 0) | (0, _) => 0,
                _ => k * stirling(n - 1, k) + stirling(n - 1, k - 1),
            }
        }
        for n in 0..8 {
            for max in 0..5 {
                let expected: usize = (0..=max).map(|k| stirling(n, k)).sum();
                assert_eq!(
                    SetPartitions::new(n, max).count(),
                    expected,
                    "n={n} max={max}"
                );
            }
        }
        let p: Vec<_> = SetPartitions::new(3, 3).collect();
        assert_eq!(
            p,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }
}
