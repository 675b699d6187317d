//! Lexicographic k-subset enumeration used by the ascending-cardinality
//! searches.

/// Calls `f` with each k-subset of `0..m` (as a sorted index slice) in
/// lexicographic order, stopping early when `f` returns `true`. Returns
/// whether enumeration stopped early.
pub(crate) fn each_k_subset<F>(m: usize, k: usize, mut f: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if k > m {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        // rightmost position that can still move right
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != m - k + i {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_in_lexicographic_order() {
        let mut seen = Vec::new();
        each_k_subset(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn k_zero_yields_the_empty_subset_once() {
        let mut count = 0;
        each_k_subset(3, 0, |s| {
            assert!(s.is_empty());
            count += 1;
            false
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn stops_early() {
        let mut count = 0;
        let stopped = each_k_subset(5, 2, |_| {
            count += 1;
            count == 3
        });
        assert!(stopped);
        assert_eq!(count, 3);
    }

    #[test]
    fn k_larger_than_m_is_empty() {
        let mut count = 0;
        each_k_subset(2, 3, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 0);
    }
}
