//! Scalar helpers shared by every module: exact integer and rational aliases,
//! square classes, small-integer factorization and rational string codecs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// Returns the integer value of `q` when its denominator is 1.
pub fn as_integer(q: &Rat) -> Option<Int> {
    q.is_integer().then(|| q.to_integer())
}

pub fn to_i64(v: &Int) -> Option<i64> {
    v.to_i64()
}

/// Prime factorization of `|n|` by trial division, primes ascending with multiplicity counts.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Product of the distinct primes dividing `n` (rad(0) is undefined, rad(1) = 1).
pub fn radical(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product()
}

/// Squarefree representative of the class of `n` in `Z∖{0} / squares`, sign kept.
pub fn squarefree_int(n: &Int) -> Int {
    assert!(!n.is_zero(), "square class of zero");
    let mut m = n.abs();
    let mut out = Int::one();
    let mut p = Int::from(2);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out *= m;
    if n.is_negative() {
        -out
    } else {
        out
    }
}

/// Squarefree representative of a nonzero rational's square class: the class of `p·q`.
pub fn squarefree_rat(q: &Rat) -> Int {
    squarefree_int(&(q.numer() * q.denom()))
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Content of a list of rationals: the positive generator of the Z-module they span.
pub fn rat_content(v: &[Rat]) -> Rat {
    let mut num = Int::zero();
    let mut den = Int::one();
    for q in v {
        num = num.gcd(q.numer());
        den = den.lcm(q.denom());
    }
    Rat::new(num, den)
}

/// Parses `"3"`, `"-3/2"` or `"3/2"` into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n.trim().parse().ok()?, d))
        }
        None => Some(Rat::from_integer(s.parse().ok()?)),
    }
}

/// Canonical string of a rational: `"n"` for integers, `"n/d"` otherwise.
pub fn fmt_rat(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Integer square root floor for `n ≥ 0`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn is_square_mod(x: i64, m: i64) -> bool {
    let m = m.abs();
    if m <= 1 {
        return true;
    }
    let r = x.rem_euclid(m);
    (0..m).any(|y| (y * y) % m == r)
}
