//! Exact integer arithmetic: gcd, primality, factorization, sieves, and
//! big-integer Fibonacci numbers.
//!
//! Two tiers of naturals are used. The machine tier is `u64` with checked
//! arithmetic (overflow is an error, never a silent promotion); it backs
//! every scan. The big tier is [`BigUint`] and backs Fibonacci numbers and
//! other elements that outgrow 64 bits.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Greatest common divisor of `a` and `b`.
///
/// At least one argument must be nonzero; `gcd(0, 0)` is a domain error.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_u64(a, b))
}

/// Stein's binary gcd with the convention gcd(0, 0) = 0.
pub(crate) fn gcd_u64(mut u: u64, mut v: u64) -> u64 {
    if u == 0 {
        return v;
    }
    if v == 0 {
        return u;
    }
    let shift = (u | v).trailing_zeros();
    u >>= u.trailing_zeros();
    loop {
        v >>= v.trailing_zeros();
        if u > v {
            std::mem::swap(&mut u, &mut v);
        }
        v -= u;
        if v == 0 {
            return u << shift;
        }
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Strong-pseudoprime witnesses: the first twelve primes decide primality
/// for every `n < 2^64` (Sorenson & Webster).
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic, exact primality for the machine tier.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// How certain a primality verdict is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    /// Decided exactly (machine tier, deterministic witness set).
    Deterministic,
    /// Miller-Rabin with 64 rounds seeded from the input; error below
    /// 2^-128.
    Probabilistic,
}

/// Primality verdict for the big tier, flagged with its certainty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BigPrimality {
    pub is_prime: bool,
    pub certainty: Certainty,
}

/// Primality for arbitrary-precision inputs.
///
/// Inputs that fit in 64 bits get the deterministic test. Larger inputs
/// get 64 Miller-Rabin rounds with bases drawn from a generator seeded
/// from the input bytes, so repeated calls agree.
pub fn is_prime_big(n: &BigUint) -> BigPrimality {
    if let Ok(small) = u64::try_from(n) {
        return BigPrimality {
            is_prime: is_prime(small),
            certainty: Certainty::Deterministic,
        };
    }
    BigPrimality {
        is_prime: miller_rabin_big(n, 64),
        certainty: Certainty::Probabilistic,
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn miller_rabin_big(n: &BigUint, rounds: u32) -> bool {
    use num_integer::Integer;
    use rand_chacha::rand_core::{RngCore, SeedableRng};

    debug_assert!(n.bits() > 64);
    if n.is_even() {
        return false;
    }
    // Cheap trial division before the expensive rounds.
    for p in primes_up_to(1000) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let two = &one + &one;
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(fnv1a(&n.to_bytes_le()));
    // Random base in [2, n-2]: draw raw limbs, mask, and reject values out
    // of range.
    let limbs = n.bits().div_ceil(64) as usize;
    let top_mask = if n.bits() % 64 == 0 {
        u64::MAX
    } else {
        (1u64 << (n.bits() % 64)) - 1
    };
    let upper = &n_minus_1 - &two; // draws land in [0, n-4], shifted by 2
    let mut draw_base = || loop {
        let mut words = vec![0u64; limbs];
        for w in words.iter_mut() {
            *w = rng.next_u64();
        }
        *words.last_mut().unwrap() &= top_mask;
        let v = BigUint::from_slice(
            &words
                .iter()
                .flat_map(|w| [*w as u32, (*w >> 32) as u32])
                .collect::<Vec<_>>(),
        );
        if v <= upper {
            return v + &two;
        }
    };

    'round: for _ in 0..rounds {
        let a = draw_base();
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'round;
            }
        }
        return false;
    }
    true
}

use num_traits::Zero;

/// Complete prime factorization of a machine-tier natural, primes
/// ascending. The factorization of 1 is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// `(prime, exponent)` pairs, primes strictly ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The distinct primes, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Rebuild the factored input.
    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    /// Smallest prime factor, absent for 1.
    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }
}

/// Effort bounds for [`factorize_with`].
///
/// Trial division runs over primes up to `trial_division_bound`; whatever
/// cofactor survives is split by Brent's cycle-finding rho. The rho
/// polynomials x^2 + c are tried with c = 1, 2, …, `rho_polynomials`, each
/// for at most `rho_iterations_per_poly` steps, so runs are reproducible.
#[derive(Debug, Clone)]
pub struct FactorEffort {
    pub trial_division_bound: u64,
    pub rho_polynomials: u64,
    pub rho_iterations_per_poly: u64,
}

impl Default for FactorEffort {
    fn default() -> Self {
        FactorEffort {
            trial_division_bound: 10_000,
            rho_polynomials: 32,
            rho_iterations_per_poly: 1 << 22,
        }
    }
}

/// Factor `n ≥ 1` with the default effort (ample for any 64-bit input).
pub fn factorize(n: u64) -> Result<Factorization> {
    factorize_with(n, &FactorEffort::default())
}

/// Factor `n ≥ 1` within an explicit effort budget.
///
/// Fails with [`Error::FactorizationEffortExceeded`] if some cofactor
/// resists the budget; a partial or wrong factorization is never returned.
pub fn factorize_with(n: u64, effort: &FactorEffort) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::FactorizeZero);
    }
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;

    let push = |p: u64, factors: &mut Vec<(u64, u32)>| match factors.last_mut() {
        Some((q, e)) if *q == p => *e += 1,
        _ => factors.push((p, 1)),
    };

    for p in TrialDivisors::new() {
        if p > effort.trial_division_bound || p.saturating_mul(p) > rest {
            break;
        }
        while rest % p == 0 {
            rest /= p;
            push(p, &mut factors);
        }
    }

    if rest > 1 {
        let limit = effort
            .trial_division_bound
            .saturating_mul(effort.trial_division_bound);
        if rest <= limit || is_prime(rest) {
            // Either the cofactor is prime, or all factors below the trial
            // bound are exhausted and the cofactor is below its square.
            push(rest, &mut factors);
        } else {
            let mut stack = vec![rest];
            let mut found: Vec<u64> = Vec::new();
            while let Some(c) = stack.pop() {
                if is_prime(c) {
                    found.push(c);
                    continue;
                }
                match brent_rho(c, effort) {
                    Some(d) => {
                        stack.push(d);
                        stack.push(c / d);
                    }
                    None => return Err(Error::FactorizationEffortExceeded { value: n }),
                }
            }
            found.sort_unstable();
            for p in found {
                push(p, &mut factors);
            }
        }
    }

    factors.sort_unstable();
    debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
    Ok(Factorization { factors })
}

/// 2, 3, then the 6k±1 wheel.
struct TrialDivisors {
    next: u64,
    step: u64,
}

impl TrialDivisors {
    fn new() -> Self {
        TrialDivisors { next: 2, step: 0 }
    }
}

impl Iterator for TrialDivisors {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let out = self.next;
        (self.next, self.step) = match out {
            2 => (3, 0),
            3 => (5, 2),
            d => (d + self.step, 6 - self.step),
        };
        Some(out)
    }
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`, or `None` if the budget runs out. The polynomial
/// sequence x^2 + c, c = 1, 2, … is fixed, so results are reproducible.
fn brent_rho(n: u64, effort: &FactorEffort) -> Option<u64> {
    debug_assert!(n > 1 && !is_prime(n) && n % 2 == 1);
    for c in 1..=effort.rho_polynomials {
        if let Some(d) = brent_rho_cycle(n, c, effort.rho_iterations_per_poly) {
            return Some(d);
        }
    }
    None
}

fn brent_rho_cycle(n: u64, c: u64, max_iters: u64) -> Option<u64> {
    let f = |x: u64| {
        let y = mul_mod(x, x, n);
        if y + c >= n {
            y + c - n
        } else {
            y + c
        }
    };
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut iters = 0u64;
    let (mut x, mut ys) = (y, y);
    let mut g = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0u64;
        while k < r && g == 1 {
            ys = y;
            let batch = 128.min(r - k);
            for _ in 0..batch {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd_u64(q, n);
            k += batch;
            iters += batch;
            if iters > max_iters {
                return None;
            }
        }
        r *= 2;
    }
    if g == n {
        // Backtrack one step at a time to recover the factor.
        loop {
            ys = f(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    if g == n {
        None
    } else {
        Some(g)
    }
}

/// All primes `≤ limit`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i as u64);
            for j in (i * i..=limit).step_by(i) {
                composite[j] = true;
            }
        }
    }
    primes
}

/// Smallest-prime-factor table for a contiguous value range, built by
/// marking multiples of the base primes up to √hi.
///
/// Immutable once built; share freely across threads.
pub struct SpfSegment {
    lo: u64,
    spf: Vec<u64>,
}

impl SpfSegment {
    /// Cover the inclusive range `[lo, hi]`.
    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidParameter(format!(
                "empty segment [{lo}, {hi}]"
            )));
        }
        let len = usize::try_from(hi - lo + 1)
            .map_err(|_| Error::Overflow { context: "segment length" })?;
        let mut spf = vec![0u64; len];
        let root = hi.isqrt();
        for p in primes_up_to(root) {
            let first = lo.div_ceil(p).max(2) * p;
            let mut v = first;
            while v <= hi {
                let slot = &mut spf[(v - lo) as usize];
                if *slot == 0 {
                    *slot = p;
                }
                match v.checked_add(p) {
                    Some(next) => v = next,
                    None => break,
                }
            }
        }
        // Whatever survives unmarked is 1, a prime, or a prime power of a
        // prime above the root — for spf purposes, itself.
        for (i, slot) in spf.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = lo + i as u64;
            }
        }
        Ok(SpfSegment { lo, spf })
    }

    /// Smallest prime factor of `v` (which must lie in the segment).
    /// By convention `spf(1) = 1`.
    pub fn spf(&self, v: u64) -> u64 {
        self.spf[(v - self.lo) as usize]
    }

    /// Exact primality for `v` in the segment.
    pub fn is_prime(&self, v: u64) -> bool {
        v >= 2 && self.spf(v) == v
    }
}

/// Smallest prime factor of `n ≥ 2` by trial division, falling back to
/// full factorization only if no divisor is found below the bound.
pub fn smallest_prime_factor(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "smallest_prime_factor({n}) is undefined"
        )));
    }
    for p in TrialDivisors::new() {
        if p > 10_000 || p.saturating_mul(p) > n {
            break;
        }
        if n % p == 0 {
            return Ok(p);
        }
    }
    if n <= 100_000_000 || is_prime(n) {
        return Ok(n);
    }
    Ok(factorize(n)?.smallest_prime().expect("n > 1"))
}

/// The `i`-th Fibonacci number (big tier), with F_1 = F_2 = 1.
///
/// Uses fast doubling; the result is exact. Index 0 is a domain error.
pub fn fib(i: u64) -> Result<BigUint> {
    if i == 0 {
        return Err(Error::FibIndexZero);
    }
    Ok(fib_pair(i).0)
}

/// (F_k, F_{k+1}) by fast doubling, with the internal convention F_0 = 0.
fn fib_pair(k: u64) -> (BigUint, BigUint) {
    if k == 0 {
        return (BigUint::zero(), BigUint::one());
    }
    let (a, b) = fib_pair(k / 2);
    // F_{2m} = F_m (2 F_{m+1} − F_m); F_{2m+1} = F_m² + F_{m+1}²
    let two_b_minus_a = (&b << 1) - &a;
    let c = &a * &two_b_minus_a;
    let d = &a * &a + &b * &b;
    if k % 2 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}
