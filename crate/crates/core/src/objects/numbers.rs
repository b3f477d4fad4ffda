use num_bigint::BigUint;
use num_traits::One;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Number of 231-avoiders of `[n]` with exactly `k` non-overlapping
/// descents: `binom(n+1, 2k+1) binom(n+k, k) / (n+1)`.
pub fn refined_catalan(n: u64, k: u64) -> BigUint {
    binomial(n + 1, 2 * k + 1) * binomial(n + k, k) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let cats: Vec<BigUint> = (0..=10).map(catalan).collect();
        let want: Vec<BigUint> = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
            .iter()
            .map(|&c| BigUint::from(c))
            .collect();
        assert_eq!(cats, want);
        assert_eq!(factorial(7), BigUint::from(5040u32));
    }

    #[test]
    fn refined_rows_sum_to_catalan() {
        for n in 1..=15u64 {
            let row: BigUint = (0..=n / 2).map(|k| refined_catalan(n, k)).sum();
            assert_eq!(row, catalan(n), "n={n}");
        }
    }
}
