//! When does a prime `m ≡ ±1 (mod 6)` divide `p(n,3)`?
//!
//! For `m ≡ −1 (mod 6)` the answer is the nine residues
//! `±{0, 1, 2, 2m−2, 2m+1}` modulo `6m`. For `m ≡ 1 (mod 6)` it is the eleven
//! residues `±{0, 1, 2, 2m−1, 2m+2, 3m+s(m−1)}` where `s² ≡ −3 (mod m)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partitions::count_bruteforce;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `m ≡ −1 (mod 6)`
    MinusOne,
    /// `m ≡ 1 (mod 6)`
    PlusOne,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueCharacterization {
    pub modulus: u64,
    pub period: u64,
    pub residues: BTreeSet<u64>,
    pub family: Family,
    pub sqrt_minus3: Option<(u64, u64)>,
}

impl ResidueCharacterization {
    pub fn contains(&self, n: u64) -> bool {
        self.residues.contains(&(n % self.period))
    }

    /// Residues not witnessed by largest-minus-smallest: the `±(3m+s(m−1))` pair.
    pub fn unwitnessed(&self) -> BTreeSet<u64> {
        match (self.family, self.sqrt_minus3) {
            (Family::PlusOne, Some((s, _))) => signed_closure(self.modulus, &[3 * self.modulus as i64 + s as i64 * (self.modulus as i64 - 1)]),
            _ => BTreeSet::new(),
        }
    }
}

/// Trial-division primality.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m < 4 {
        return true;
    }
    if m.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Classifies a supported modulus.
pub fn family(m: u64) -> Result<Family, Error> {
    if !is_prime(m) {
        return Err(Error::UnsupportedModulus(m));
    }
    match m % 6 {
        5 => Ok(Family::MinusOne),
        1 => Ok(Family::PlusOne),
        _ => Err(Error::UnsupportedModulus(m)),
    }
}

fn signed_closure(m: u64, base: &[i64]) -> BTreeSet<u64> {
    let period = 6 * m as i64;
    base.iter()
        .flat_map(|&b| [b, -b])
        .map(|v| v.rem_euclid(period) as u64)
        .collect()
}

pub fn residues_neg(m: u64) -> Result<ResidueCharacterization, Error> {
    if family(m)? != Family::MinusOne {
        return Err(Error::UnsupportedModulus(m));
    }
    let mi = m as i64;
    Ok(ResidueCharacterization {
        modulus: m,
        period: 6 * m,
        residues: signed_closure(m, &[0, 1, 2, 2 * mi - 2, 2 * mi + 1]),
        family: Family::MinusOne,
        sqrt_minus3: None,
    })
}

/// Both square roots of −3 modulo `m`, smaller first, by linear scan.
pub fn sqrt_minus3(m: u64) -> Result<(u64, u64), Error> {
    if family(m)? != Family::PlusOne {
        return Err(Error::UnsupportedModulus(m));
    }
    let s = (1..m)
        .find(|&s| (s as u128 * s as u128 + 3).is_multiple_of(m as u128))
        .ok_or(Error::NoSquareRoot(m))?;
    Ok((s.min(m - s), s.max(m - s)))
}

pub fn residues_pos(m: u64) -> Result<ResidueCharacterization, Error> {
    let (s, t) = sqrt_minus3(m)?;
    let mi = m as i64;
    let extra = 3 * mi + s as i64 * (mi - 1);
    Ok(ResidueCharacterization {
        modulus: m,
        period: 6 * m,
        residues: signed_closure(m, &[0, 1, 2, 2 * mi - 1, 2 * mi + 2, extra]),
        family: Family::PlusOne,
        sqrt_minus3: Some((s, t)),
    })
}

/// Dispatches on `m mod 6`.
pub fn characterize(m: u64) -> Result<ResidueCharacterization, Error> {
    match family(m)? {
        Family::MinusOne => residues_neg(m),
        Family::PlusOne => residues_pos(m),
    }
}

pub fn is_divisible(n: u64, m: u64) -> Result<bool, Error> {
    Ok(characterize(m)?.contains(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub modulus: u64,
    pub n_max: u64,
    pub success: bool,
    pub counterexample: Option<u64>,
}

/// Compares the residue characterization against `count_bruteforce(n) mod m` for all `n ≤ n_max`.
pub fn verify_characterization(m: u64, n_max: u64) -> Result<VerificationReport, Error> {
    let ch = characterize(m)?;
    let counterexample = (0..=n_max).find(|&n| ch.contains(n) != count_bruteforce(n).is_multiple_of(m));
    Ok(VerificationReport {
        modulus: m,
        n_max,
        success: counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..40).filter(|&m| is_prime(m)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn neg_family() {
        assert_eq!(residues_neg(5).unwrap().residues, set(&[0, 1, 2, 8, 11, 19, 22, 28, 29]));
        assert_eq!(residues_neg(11).unwrap().residues, set(&[0, 1, 2, 20, 23, 43, 46, 64, 65]));
        assert!(residues_neg(5).unwrap().contains(22));
        assert!(residues_neg(7).is_err());
        assert!(residues_neg(25).is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_minus3(7), Ok((2, 5)));
        assert_eq!(sqrt_minus3(13), Ok((6, 7)));
        assert_eq!(sqrt_minus3(19), Ok((4, 15)));
        assert!(sqrt_minus3(11).is_err());
        assert!(sqrt_minus3(49).is_err());
    }

    #[test]
    fn pos_family() {
        let r7 = residues_pos(7).unwrap();
        assert_eq!(r7.residues, set(&[0, 1, 2, 9, 13, 16, 26, 29, 33, 40, 41]));
        assert!(r7.contains(9));
        assert_eq!(r7.unwitnessed(), set(&[9, 33]));
        assert_eq!(residues_pos(13).unwrap().residues.len(), 11);
    }

    #[test]
    fn either_root_gives_same_set() {
        for m in [7u64, 13, 19, 31, 37, 43] {
            let (s, t) = sqrt_minus3(m).unwrap();
            let mi = m as i64;
            let a = signed_closure(m, &[3 * mi + s as i64 * (mi - 1)]);
            let b = signed_closure(m, &[3 * mi + t as i64 * (mi - 1)]);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn divisibility_dispatch() {
        assert_eq!(is_divisible(22, 5), Ok(true));
        assert_eq!(is_divisible(9, 7), Ok(true));
        assert_eq!(is_divisible(10, 5), Ok(false));
        assert_eq!(is_divisible(10, 6), Err(Error::UnsupportedModulus(6)));
        assert_eq!(is_divisible(10, 3), Err(Error::UnsupportedModulus(3)));
    }

    #[test]
    fn verification_examples() {
        assert!(verify_characterization(5, 300).unwrap().success);
        assert!(verify_characterization(7, 420).unwrap().success);
        assert!(verify_characterization(11, 660).unwrap().success);
    }

    #[test]
    fn no_residue_three_mod_six_for_minus_one() {
        for m in [5u64, 11, 17, 23, 29, 41, 47] {
            let ch = residues_neg(m).unwrap();
            assert_eq!(ch.residues.len(), 9);
            assert!(ch.residues.iter().all(|r| r % 6 != 3), "m={m}");
            for &r in &ch.residues {
                assert!(ch.residues.contains(&((ch.period - r) % ch.period)));
            }
        }
    }
}
