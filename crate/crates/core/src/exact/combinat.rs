//! Binomial and Gaussian binomial coefficients.

/// `C(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Gaussian binomial `[d choose k]_p`, the number of `k`-dimensional
/// subspaces of `F_p^d`. `None` on `u128` overflow.
pub fn gaussian_binomial(d: usize, k: usize, p: u64) -> Option<u128> {
    if k > d {
        return Some(0);
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul(p.checked_pow((d - i) as u32)?.checked_sub(1)?)?;
        den = den.checked_mul(p.checked_pow((i + 1) as u32)?.checked_sub(1)?)?;
    }
    Some(num / den)
}

/// Total number of subspaces of `F_p^d` of all dimensions.
pub fn total_subspaces(d: usize, p: u64) -> Option<u128> {
    (0..=d).try_fold(0u128, |acc, k| acc.checked_add(gaussian_binomial(d, k, p)?))
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(2 + 2, 2), 6);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(0, 0), 1);
        // p_1 = m_1 + m_2 * a with a = dim S^1 of three variables
        assert_eq!(1 + 3 * binom(3, 2), 10);
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 1, 2), Some(3));
        assert_eq!(gaussian_binomial(3, 1, 3), Some(13));
        assert_eq!(gaussian_binomial(4, 2, 2), Some(35));
        assert_eq!(gaussian_binomial(9, 4, 2), Some(3_309_747));
        assert_eq!(total_subspaces(2, 2), Some(5));
    }

    #[test]
    fn combination_order() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
