//! Positive reduced rationals in height order: `1`, then for each `h >= 2`
//! the block `1/h, 2/h, ..., (h-1)/h, h/(h-1), ..., h/1` with reducible
//! fractions omitted. Indices are 1-based.

use num_integer::Integer;

use crate::exactnum::Rational;

/// Iterator over the height-ordered sequence, optionally starting mid-stream.
#[derive(Debug, Clone)]
pub struct RationalsByHeight {
    height: u64,
    // Position in the block of `height`: 1..h-1 for i/h, then h..2h-2 for h/(2h-1-pos).
    pos: u64,
}

impl RationalsByHeight {
    pub fn new() -> Self {
        RationalsByHeight { height: 1, pos: 0 }
    }

    /// Starts at the given 1-based index.
    pub fn starting_at(index: u64, table: &HeightTable) -> Self {
        let mut it = Self::new();
        if index <= 1 {
            return it;
        }
        let (h, offset) = table.locate(index);
        it.height = h;
        it.pos = 0;
        for _ in 0..offset {
            it.advance();
        }
        it
    }

    fn advance(&mut self) -> Option<(u64, u64)> {
        loop {
            if self.height == 1 {
                if self.pos == 0 {
                    self.pos = 1;
                    return Some((1, 1));
                }
                self.height = 2;
                self.pos = 0;
            }
            let h = self.height;
            self.pos += 1;
            if self.pos >= 2 * h - 1 {
                self.height += 1;
                self.pos = 0;
                continue;
            }
            let (p, q) = if self.pos < h {
                (self.pos, h)
            } else {
                (h, 2 * h - 1 - self.pos)
            };
            if p.gcd(&q) == 1 {
                return Some((p, q));
            }
        }
    }
}

impl Default for RationalsByHeight {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for RationalsByHeight {
    /// `(numerator, denominator)`, coprime and positive.
    type Item = (u64, u64);

    fn next(&mut self) -> Option<Self::Item> {
        self.advance()
    }
}

/// The first `limit` values of the sequence.
pub fn enumerate_rationals(limit: usize) -> Vec<Rational> {
    RationalsByHeight::new()
        .take(limit)
        .map(|(p, q)| Rational::new(p, q).expect("q > 0"))
        .collect()
}

/// Cumulative counts of the sequence by height, from a totient sieve.
#[derive(Debug, Clone)]
pub struct HeightTable {
    // cumulative[h] = number of values with height <= h
    cumulative: Vec<u64>,
}

impl HeightTable {
    pub fn new(max_height: u64) -> Self {
        let n = max_height.max(1) as usize;
        let mut phi: Vec<u64> = (0..=n as u64).collect();
        for i in 2..=n {
            if phi[i] == i as u64 {
                for j in (i..=n).step_by(i) {
                    phi[j] -= phi[j] / i as u64;
                }
            }
        }
        let mut cumulative = vec![0u64; n + 1];
        cumulative[1] = 1;
        for h in 2..=n {
            cumulative[h] = cumulative[h - 1] + 2 * phi[h];
        }
        HeightTable { cumulative }
    }

    pub fn max_height(&self) -> u64 {
        (self.cumulative.len() - 1) as u64
    }

    /// Number of values of height at most `h`.
    pub fn count_up_to(&self, h: u64) -> u64 {
        self.cumulative[h as usize]
    }

    /// Height of the value at `index`, and how many values of that height
    /// precede it.
    pub fn locate(&self, index: u64) -> (u64, u64) {
        assert!(
            index >= 1 && index <= *self.cumulative.last().unwrap(),
            "index {index} outside the table"
        );
        let h = self.cumulative.partition_point(|&c| c < index) as u64;
        (h, index - 1 - self.cumulative[h as usize - 1])
    }

    /// 1-based index of a positive rational, if its height is in the table.
    pub fn index_of(&self, x: &Rational) -> Option<u64> {
        if !x.is_positive() {
            return None;
        }
        let p: u64 = x.numer().try_into().ok()?;
        let q: u64 = x.denom().try_into().ok()?;
        let h = p.max(q);
        if h > self.max_height() {
            return None;
        }
        if h == 1 {
            return Some(1);
        }
        let before = self.cumulative[h as usize - 1];
        let rank_in = |bound: u64, upto: u64| (1..=upto).filter(|i| i.gcd(&bound) == 1).count() as u64;
        let offset = if q == h {
            rank_in(h, p) - 1
        } else {
            // h/q with q descending from h-1: count coprime j in [q, h-1].
            let block_len = self.cumulative[h as usize] - before;
            block_len / 2 + (q..h).filter(|j| j.gcd(&h) == 1).count() as u64 - 1
        };
        Some(before + offset + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn first_values() {
        let got: Vec<String> = enumerate_rationals(7).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["1", "1/2", "2", "1/3", "2/3", "3/2", "3"]);
    }

    #[test]
    fn height_four_block_skips_reducible() {
        let got: Vec<String> = enumerate_rationals(11)[7..].iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["1/4", "3/4", "4/3", "4"]);
    }

    #[test]
    fn counts_match_brute_force() {
        let table = HeightTable::new(60);
        for h in 1..=60u64 {
            let brute = (1..=h)
                .flat_map(|p| (1..=h).map(move |q| (p, q)))
                .filter(|&(p, q)| p.gcd(&q) == 1)
                .count() as u64;
            assert_eq!(table.count_up_to(h), brute, "h={h}");
        }
        assert_eq!(table.count_up_to(10), 63);
        let emitted = RationalsByHeight::new().take_while(|&(p, q)| p.max(q) <= 10).count();
        assert_eq!(emitted, 63);
    }

    #[test]
    fn index_round_trip() {
        let table = HeightTable::new(40);
        for (i, (p, qq)) in RationalsByHeight::new().take(table.count_up_to(40) as usize).enumerate() {
            let index = i as u64 + 1;
            let x = Rational::new(p, qq).unwrap();
            assert_eq!(table.index_of(&x), Some(index), "{x}");
            let mut it = RationalsByHeight::starting_at(index, &table);
            assert_eq!(it.next(), Some((p, qq)));
        }
        assert_eq!(table.index_of(&q("-1/2")), None);
        assert_eq!(table.index_of(&q("41")), None);
    }

    #[test]
    fn almost_quadruple_parameter_index() {
        let table = HeightTable::new(64);
        let idx = table.index_of(&q("64/9")).unwrap();
        let x = RationalsByHeight::starting_at(idx, &table).next().unwrap();
        assert_eq!(x, (64, 9));
    }
}
