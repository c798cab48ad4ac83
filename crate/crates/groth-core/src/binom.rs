//! Binomial coefficients with integer (possibly negative) upper index.
//!
//! The convention is the polynomial one: `C(n, k)` is the coefficient of
//! `x^k` in `(1 + x)^n`, so `C(n, k) = n (n-1) ... (n-k+1) / k!` for any
//! integer `n` and `C(n, k) = 0` for `k < 0`.  Pascal's rule
//! `C(n, k) = C(n-1, k) + C(n-1, k-1)` then holds for all integers.

/// `C(n, k)` for integer `n` (negative allowed) and integer `k`.
///
/// Zero when `k < 0`, or when `n >= 0` and `k > n`.  For negative `n` the
/// reflection `C(n, k) = (-1)^k C(k - n - 1, k)` applies, so the value is
/// never zero there.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    if n < 0 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        return sign * binomial(k - n - 1, k);
    }
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut value: i64 = 1;
    for i in 0..k {
        value = value * (n - i) / (i + 1);
    }
    value
}

/// Both sides of the guarded alternating sum that collapses to its last
/// term:
///
/// ```text
/// sum_{x = lo}^{hi, x >= r} (-1)^(x-r) C(q + [x > lo], x - r)
///     = [hi >= r] (-1)^(hi-r) C(q, hi-r)
/// ```
///
/// where `[P]` is 1 when `P` holds and 0 otherwise.  Every summand except
/// the first carries the bumped top `q + 1`; splitting it by Pascal's rule
/// cancels the accumulated sum, so induction on `hi` proves equality for all
/// integers `r`, `q` and `lo <= hi`.  Returns `(left, right)` so callers can
/// assert their equality.
pub fn binomial_telescope(r: i64, q: i64, lo: i64, hi: i64) -> (i64, i64) {
    assert!(lo <= hi, "empty summation range");
    let left: i64 = (lo..=hi)
        .filter(|&x| x >= r)
        .map(|x| {
            let sign = if (x - r) % 2 == 0 { 1 } else { -1 };
            let bump = i64::from(x > lo);
            sign * binomial(q + bump, x - r)
        })
        .sum();
    let right = if hi >= r {
        let sign = if (hi - r) % 2 == 0 { 1 } else { -1 };
        sign * binomial(q, hi - r)
    } else {
        0
    };
    (left, right)
}
