/// Splits `1..=total` into `parts` contiguous, disjoint, covering intervals
/// whose sizes differ by at most one. Earlier intervals take the remainder.
/// Parts beyond `total` come back empty as `(lo, lo - 1)`.
pub fn partition_range(total: u64, parts: u64) -> Vec<(u64, u64)> {
    assert!(parts >= 1, "at least one partition");
    let base = total / parts;
    let extra = total % parts;
    let mut lo = 1;
    (0..parts)
        .map(|i| {
            let size = base + u64::from(i < extra);
            let range = (lo, lo + size - 1);
            lo += size;
            range
        })
        .collect()
}

/// Same split applied to an arbitrary inclusive window `lo..=hi`.
pub fn partition_window(lo: u64, hi: u64, parts: u64) -> Vec<(u64, u64)> {
    let total = if hi >= lo { hi - lo + 1 } else { 0 };
    partition_range(total, parts)
        .into_iter()
        .map(|(a, b)| (a + lo - 1, b + lo - 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(partition_range(10, 3), vec![(1, 4), (5, 7), (8, 10)]);
        assert_eq!(partition_range(5, 5), vec![(1, 1), (2, 2), (3, 3), (4, 4), (5, 5)]);
        assert_eq!(partition_range(7, 1), vec![(1, 7)]);
        assert_eq!(partition_window(11, 20, 3), vec![(11, 14), (15, 17), (18, 20)]);
    }

    proptest! {
        #[test]
        fn covers_contiguously(total in 0u64..500, parts in 1u64..40) {
            let ranges = partition_range(total, parts);
            prop_assert_eq!(ranges.len() as u64, parts);
            let mut next = 1;
            let sizes: Vec<u64> = ranges.iter().map(|&(lo, hi)| {
                assert_eq!(lo, next);
                next = hi + 1;
                hi + 1 - lo
            }).collect();
            prop_assert_eq!(next, total + 1);
            let (min, max) = (sizes.iter().min().unwrap(), sizes.iter().max().unwrap());
            prop_assert!(max - min <= 1);
        }
    }
}
