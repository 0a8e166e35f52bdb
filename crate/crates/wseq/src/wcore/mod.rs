//! The W-sequence decision engine.
//!
//! An element of a sequence is a *W number* when it is coprime to every
//! other element; a sequence with at least one W number is a *W sequence*.
//! Two independent deciders are provided: [`w_report_oracle`], a quadratic
//! all-pairs-gcd reference that serves as ground truth, and [`w_report`],
//! the factor-map method (factor every element, map each prime to the set
//! of element indices it divides; an element is a W number exactly when
//! all of its primes map to singletons).
//!
//! Monte Carlo estimators for coprimality densities live in [`estimate`]
//! and are re-exported here.

mod estimate;

pub use estimate::{
    estimate_exists_coprime_prob, estimate_pairwise_coprime_prob, exists_coprime_reference,
    pairwise_coprime_reference, zeta, Estimate,
};

use crate::arith::{self, FactorEffort};
use crate::error::{Error, Result};

/// A strictly increasing sequence of at least two positive integers.
///
/// The strict increase makes duplicates unrepresentable; callers that want
/// multiset semantics must deduplicate first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence(Vec<u64>);

impl Sequence {
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.len() < 2 {
            return Err(Error::InvalidSequence(format!(
                "need at least 2 elements, got {}",
                elements.len()
            )));
        }
        if elements[0] == 0 {
            return Err(Error::InvalidSequence("elements must be positive".into()));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(format!(
                "not strictly increasing at {} >= {}",
                w[0], w[1]
            )));
        }
        Ok(Sequence(elements))
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor guarantees len >= 2
    }
}

/// Why an element is not a W number: a prime it shares with a partner.
///
/// Selection is deterministic: the smallest shared prime, then the
/// smallest partner index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub prime: u64,
    pub partner_index: usize,
}

/// Per-element coprimality verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub index: usize,
    pub coprime_to_rest: bool,
    pub witness: Option<Witness>,
}

/// Full W-status report for a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WReport {
    pub is_w: bool,
    pub verdicts: Vec<Verdict>,
    pub w_indices: Vec<usize>,
}

impl WReport {
    fn from_verdicts(verdicts: Vec<Verdict>) -> Self {
        let w_indices: Vec<usize> = verdicts
            .iter()
            .filter(|v| v.coprime_to_rest)
            .map(|v| v.index)
            .collect();
        WReport {
            is_w: !w_indices.is_empty(),
            verdicts,
            w_indices,
        }
    }

    /// Number of W numbers.
    pub fn w_count(&self) -> usize {
        self.w_indices.len()
    }
}

/// Ground-truth W report by all-pairs gcd (quadratic).
///
/// Every faster method is validated against this one. Witness primes come
/// from trial division of the pairwise gcds, keeping this path fully
/// independent of the factorization machinery.
pub fn w_report_oracle(seq: &Sequence) -> WReport {
    let elems = seq.elements();
    let mut verdicts = Vec::with_capacity(elems.len());
    for (i, &a) in elems.iter().enumerate() {
        let mut witness: Option<Witness> = None;
        for (j, &b) in elems.iter().enumerate() {
            if i == j {
                continue;
            }
            let g = arith::gcd_u64(a, b);
            if g > 1 {
                let p = spf_by_trial_division(g);
                if witness.map_or(true, |w| p < w.prime) {
                    witness = Some(Witness { prime: p, partner_index: j });
                }
            }
        }
        verdicts.push(Verdict {
            index: i,
            coprime_to_rest: witness.is_none(),
            witness,
        });
    }
    WReport::from_verdicts(verdicts)
}

/// Plain trial division, independent of `arith::factorize`.
fn spf_by_trial_division(n: u64) -> u64 {
    debug_assert!(n >= 2);
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// W report by the factor-map method, with the default factoring effort.
///
/// Produces results identical to [`w_report_oracle`]. If some element
/// cannot be factored within the effort the call fails with
/// [`Error::UnresolvedElement`] naming it — never a wrong verdict.
pub fn w_report(seq: &Sequence) -> Result<WReport> {
    w_report_with(seq, &FactorEffort::default())
}

/// [`w_report`] under an explicit factoring effort budget.
pub fn w_report_with(seq: &Sequence, effort: &FactorEffort) -> Result<WReport> {
    let elems = seq.elements();
    let mut factorizations = Vec::with_capacity(elems.len());
    for (index, &value) in elems.iter().enumerate() {
        let f = arith::factorize_with(value, effort)
            .map_err(|_| Error::UnresolvedElement { index, value })?;
        factorizations.push(f);
    }
    Ok(report_from_prime_sets(
        elems.len(),
        |i| factorizations[i].primes().collect(),
    ))
}

/// Build a report from per-element prime sets via the prime → indices map.
pub(crate) fn report_from_prime_sets<F>(len: usize, primes_of: F) -> WReport
where
    F: Fn(usize) -> Vec<u64>,
{
    use std::collections::HashMap;
    let sets: Vec<Vec<u64>> = (0..len).map(primes_of).collect();
    let mut by_prime: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, set) in sets.iter().enumerate() {
        for &p in set {
            by_prime.entry(p).or_default().push(i);
        }
    }
    let mut verdicts = Vec::with_capacity(len);
    for (i, set) in sets.iter().enumerate() {
        // Smallest shared prime; the map's index lists are ascending.
        let mut witness: Option<Witness> = None;
        for &p in set {
            let indices = &by_prime[&p];
            if indices.len() < 2 {
                continue;
            }
            let partner = indices.iter().copied().find(|&j| j != i).expect("len >= 2");
            if witness.map_or(true, |w| p < w.prime) {
                witness = Some(Witness { prime: p, partner_index: partner });
            }
        }
        verdicts.push(Verdict {
            index: i,
            coprime_to_rest: witness.is_none(),
            witness,
        });
    }
    WReport::from_verdicts(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[u64]) -> Sequence {
        Sequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sequence_invariants() {
        assert!(Sequence::new(vec![]).is_err());
        assert!(Sequence::new(vec![5]).is_err());
        assert!(Sequence::new(vec![0, 1]).is_err());
        assert!(Sequence::new(vec![3, 3]).is_err());
        assert!(Sequence::new(vec![5, 3]).is_err());
        assert!(Sequence::new(vec![1, 2]).is_ok());
    }

    #[test]
    fn oracle_basic_cases() {
        let r = w_report_oracle(&seq(&[2, 3, 4, 5]));
        assert!(r.is_w);
        assert_eq!(r.w_indices, vec![1, 3]);

        let r = w_report_oracle(&seq(&[1, 4]));
        assert!(r.is_w);
        assert!(r.w_indices.contains(&0));

        let r = w_report_oracle(&seq(&[2, 6]));
        assert!(!r.is_w);
        for v in &r.verdicts {
            let w = v.witness.expect("blocked elements carry a witness");
            assert_eq!(w.prime, 2);
        }
        assert_eq!(r.verdicts[0].witness.unwrap().partner_index, 1);
        assert_eq!(r.verdicts[1].witness.unwrap().partner_index, 0);
    }

    #[test]
    fn witness_tie_breaking() {
        // 6 = 2·3, 10 = 2·5, 15 = 3·5: every element blocked.
        let r = w_report_oracle(&seq(&[6, 10, 15]));
        assert!(!r.is_w);
        let w: Vec<Witness> = r.verdicts.iter().map(|v| v.witness.unwrap()).collect();
        assert_eq!(w[0], Witness { prime: 2, partner_index: 1 });
        assert_eq!(w[1], Witness { prime: 2, partner_index: 0 });
        assert_eq!(w[2], Witness { prime: 3, partner_index: 0 });
    }

    #[test]
    fn factor_map_matches_oracle_on_examples() {
        for elems in [
            vec![2u64, 3, 4, 5],
            vec![5, 7, 9],
            vec![1, 4],
            vec![2, 6],
            vec![6, 10, 15],
            (2184..=2200).collect::<Vec<u64>>(),
        ] {
            let s = seq(&elems);
            assert_eq!(w_report(&s).unwrap(), w_report_oracle(&s), "on {elems:?}");
        }
        // The consecutive run 2184..2200 has no W number.
        assert!(!w_report(&seq(&(2184..=2200).collect::<Vec<_>>())).unwrap().is_w);
    }

    #[test]
    fn unresolved_element_names_the_culprit() {
        let tiny = FactorEffort {
            trial_division_bound: 50,
            rho_polynomials: 1,
            rho_iterations_per_poly: 4,
        };
        let hard = 1_000_000_007u64 * 998_244_353;
        let s = seq(&[2, 3, hard]);
        assert_eq!(
            w_report_with(&s, &tiny),
            Err(Error::UnresolvedElement { index: 2, value: hard })
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let s = seq(&[30, 42, 70, 105, 143]);
        assert_eq!(w_report(&s).unwrap(), w_report(&s).unwrap());
        assert_eq!(w_report_oracle(&s), w_report_oracle(&s));
    }

    /// Strategy: strictly increasing sequences of 2..=12 elements ≤ 10^6.
    fn arb_sequence() -> impl Strategy<Value = Sequence> {
        proptest::collection::btree_set(1u64..=1_000_000, 2..=12)
            .prop_map(|set| Sequence::new(set.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn factor_map_equals_oracle(s in arb_sequence()) {
            prop_assert_eq!(w_report(&s).unwrap(), w_report_oracle(&s));
        }

        #[test]
        fn unit_rule(s in arb_sequence()) {
            // Prepend 1 if absent; 1 is coprime to everything.
            let mut v = s.elements().to_vec();
            if v[0] != 1 {
                v.insert(0, 1);
            }
            let r = w_report_oracle(&Sequence::new(v).unwrap());
            prop_assert!(r.is_w);
            prop_assert!(r.w_indices.contains(&0));
        }

        #[test]
        fn diameter_rule(s in arb_sequence()) {
            // A prime element exceeding max - min is necessarily a W number.
            let elems = s.elements();
            let spread = elems[elems.len() - 1] - elems[0];
            let r = w_report_oracle(&s);
            for (i, &a) in elems.iter().enumerate() {
                if crate::arith::is_prime(a) && a > spread {
                    prop_assert!(r.w_indices.contains(&i), "prime {a} above spread {spread}");
                }
            }
        }

        #[test]
        fn appending_coprime_element_preserves_verdicts(s in arb_sequence()) {
            // The next prime above every element is coprime to all of them.
            let elems = s.elements();
            let mut c = elems[elems.len() - 1] + 1;
            while !crate::arith::is_prime(c) {
                c += 1;
            }
            let mut extended = elems.to_vec();
            extended.push(c);
            let before = w_report_oracle(&s);
            let after = w_report_oracle(&Sequence::new(extended).unwrap());
            prop_assert_eq!(&after.verdicts[..elems.len()], &before.verdicts[..]);
            prop_assert!(after.w_indices.contains(&elems.len()));
            prop_assert!(after.is_w);
        }
    }
}
