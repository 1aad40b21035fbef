use std::fmt;

use crate::error::RingError;

/// The ring itself, without the involution tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// Arbitrary-precision rationals in lowest terms.
    Rational,
    /// `Q(i)`: pairs of rationals `re + im*i`.
    GaussianRational,
    /// The prime field `Z/p`, `p >= 5`.
    Modular(u64),
    /// Dual numbers `base + eps*e` with `e^2 = 0` over an inner ring.
    Dual(Box<RingKind>),
}

impl RingKind {
    /// True when complex conjugation acts nontrivially somewhere in the tower.
    pub fn has_gaussian_layer(&self) -> bool {
        match self {
            RingKind::GaussianRational => true,
            RingKind::Dual(inner) => inner.has_gaussian_layer(),
            _ => false,
        }
    }

    /// True for dual-number rings, where non-units (multiples of `e`) exist.
    pub fn has_zero_divisors(&self) -> bool {
        matches!(self, RingKind::Dual(_))
    }
}

/// Ring automorphism of order at most two carried by a descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Involution {
    Identity,
    /// Complex conjugation `i -> -i`, applied through dual layers.
    Conjugation,
}

/// A ring from the catalogue together with its involution.
///
/// Descriptors are compared structurally; every [`crate::Scalar`] carries one
/// and binary operations require both operands to share it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    kind: RingKind,
    involution: Involution,
}

impl RingDescriptor {
    /// The rationals `Q`.
    pub fn rational() -> Self {
        RingDescriptor { kind: RingKind::Rational, involution: Involution::Identity }
    }

    /// The Gaussian rationals `Q(i)` with conjugation.
    pub fn gaussian_rational() -> Self {
        RingDescriptor { kind: RingKind::GaussianRational, involution: Involution::Conjugation }
    }

    /// The prime field `Z/p`.  Rejects non-primes and the primes 2 and 3.
    pub fn modular(p: u64) -> Result<Self, RingError> {
        if p == 2 || p == 3 {
            return Err(RingError::InvalidModulus(
                "modulus must make 2 and 3 units".to_string(),
            ));
        }
        if !is_prime(p) {
            return Err(RingError::InvalidModulus(format!("modulus must be prime: {p}")));
        }
        Ok(RingDescriptor { kind: RingKind::Modular(p), involution: Involution::Identity })
    }

    /// Dual numbers over `inner`, inheriting its involution.
    pub fn dual(inner: &RingDescriptor) -> Self {
        RingDescriptor {
            kind: RingKind::Dual(Box::new(inner.kind.clone())),
            involution: inner.involution,
        }
    }

    /// Replace the involution, checking that it is valid for this ring.
    pub fn with_involution(&self, involution: Involution) -> Result<Self, RingError> {
        if involution == Involution::Conjugation && !self.kind.has_gaussian_layer() {
            return Err(RingError::InvalidInvolution);
        }
        Ok(RingDescriptor { kind: self.kind.clone(), involution })
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn involution(&self) -> Involution {
        self.involution
    }

    /// The inner descriptor of a dual-number ring.
    pub fn dual_base(&self) -> Result<RingDescriptor, RingError> {
        match &self.kind {
            RingKind::Dual(inner) => Ok(RingDescriptor {
                kind: (**inner).clone(),
                involution: self.involution,
            }),
            _ => Err(RingError::NotDual(self.to_string())),
        }
    }

    /// True when the involution is nontrivial.
    pub fn is_involutive(&self) -> bool {
        self.involution == Involution::Conjugation
    }

    /// Parse a ring name: `Q`, `Qi`, `Zmod:<p>`, `dual:<inner>`.
    pub fn parse(name: &str) -> Result<Self, RingError> {
        let name = name.trim();
        if name == "Q" {
            return Ok(RingDescriptor::rational());
        }
        if name == "Qi" {
            return Ok(RingDescriptor::gaussian_rational());
        }
        if let Some(p) = name.strip_prefix("Zmod:") {
            let p: u64 = p
                .parse()
                .map_err(|_| RingError::Parse(format!("bad modulus in ring name: {name}")))?;
            return RingDescriptor::modular(p);
        }
        if let Some(inner) = name.strip_prefix("dual:") {
            let inner = RingDescriptor::parse(inner)?;
            return Ok(RingDescriptor::dual(&inner));
        }
        Err(RingError::Parse(format!("unknown ring name: {name}")))
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn kind_name(kind: &RingKind, involution: Involution) -> String {
            match kind {
                RingKind::Rational => "Q".to_string(),
                RingKind::GaussianRational => "Qi".to_string(),
                RingKind::Modular(p) => format!("Zmod:{p}"),
                RingKind::Dual(inner) => format!("dual:{}", kind_name(inner, involution)),
            }
        }
        write!(f, "{}", kind_name(&self.kind, self.involution))
    }
}

fn is_prime(n: u64) -> bool {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for name in ["Q", "Qi", "Zmod:7", "dual:Q", "dual:dual:Q", "dual:Qi"] {
            let desc = RingDescriptor::parse(name).unwrap();
            assert_eq!(desc.to_string(), name);
        }
    }

    #[test]
    fn small_moduli_rejected() {
        for p in [2u64, 3] {
            let err = RingDescriptor::modular(p).unwrap_err();
            assert_eq!(err.to_string(), "modulus must make 2 and 3 units");
        }
        assert!(RingDescriptor::modular(6).is_err());
        assert!(RingDescriptor::modular(1).is_err());
        assert!(RingDescriptor::modular(5).is_ok());
        assert!(RingDescriptor::modular(97).is_ok());
    }

    #[test]
    fn conjugation_needs_gaussian_layer() {
        let q = RingDescriptor::rational();
        assert!(q.with_involution(Involution::Conjugation).is_err());
        let qi = RingDescriptor::gaussian_rational();
        assert!(qi.with_involution(Involution::Conjugation).is_ok());
        let dual_qi = RingDescriptor::dual(&qi);
        assert!(dual_qi.with_involution(Involution::Conjugation).is_ok());
        assert_eq!(dual_qi.involution(), Involution::Conjugation);
        let dual_q = RingDescriptor::dual(&RingDescriptor::rational());
        assert!(dual_q.with_involution(Involution::Conjugation).is_err());
    }

    #[test]
    fn dual_base_peels_one_layer() {
        let d2 = RingDescriptor::parse("dual:dual:Q").unwrap();
        let d1 = d2.dual_base().unwrap();
        assert_eq!(d1.to_string(), "dual:Q");
        assert!(RingDescriptor::rational().dual_base().is_err());
    }
}
