//! Small integer helpers shared by the field, coset and formula layers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// `base^exp`, or `None` on u64 overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// `base^exp` for exponents where the caller has already bounded the result.
pub fn pow(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("integer power overflow")
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^k` with `p` prime. Returns `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut k = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        k += 1;
    }
    Some((p, k))
}

pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// `C(n, k)`, saturating at `u128::MAX` (also when an intermediate product overflows).
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(x) => acc = x / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(43, 5), 962_598);
        assert_eq!(binomial(28, 4), 20_475);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(546, 54), u128::MAX);
    }
}
