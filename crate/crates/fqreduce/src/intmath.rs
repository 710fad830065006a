//! Small integer helpers used by the cyclotomic and reduction machinery.

/// Divisors of `n` in ascending order. `n >= 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Moebius function.
pub fn mobius(mut n: u64) -> i32 {
    debug_assert!(n >= 1);
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Euler totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    while x * x > n {
        x -= 1;
    }
    x
}

/// Smallest integer `b` with `b^3 >= n^2`, i.e. ceil(n^(2/3)).
pub fn ceil_pow_two_thirds(n: u64) -> u64 {
    if n <= 1 {
        return n;
    }
    let target = (n as u128) * (n as u128);
    let mut b = ((n as f64).powf(2.0 / 3.0).ceil()) as u64;
    while (b as u128).pow(3) >= target && b > 1 && ((b - 1) as u128).pow(3) >= target {
        b -= 1;
    }
    while (b as u128).pow(3) < target {
        b += 1;
    }
    b
}
