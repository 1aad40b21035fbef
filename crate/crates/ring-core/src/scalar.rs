use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::descriptor::{Involution, RingDescriptor, RingKind};
use crate::error::RingError;

/// Payload of a scalar, shaped like its ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Rat(BigRational),
    Gauss(BigRational, BigRational),
    Mod(u64),
    Dual(Box<Value>, Box<Value>),
}

/// An exact ring element tagged with its [`RingDescriptor`].
///
/// Binary operations panic if the descriptors differ; that situation is a
/// programming error, never a data condition.  Fallible operations (inversion,
/// epsilon-part extraction) return [`RingError`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    desc: RingDescriptor,
    value: Value,
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn zero_value(kind: &RingKind) -> Value {
    match kind {
        RingKind::Rational => Value::Rat(BigRational::zero()),
        RingKind::GaussianRational => Value::Gauss(BigRational::zero(), BigRational::zero()),
        RingKind::Modular(_) => Value::Mod(0),
        RingKind::Dual(inner) => {
            Value::Dual(Box::new(zero_value(inner)), Box::new(zero_value(inner)))
        }
    }
}

fn int_value(kind: &RingKind, n: i64) -> Value {
    match kind {
        RingKind::Rational => Value::Rat(rat_int(n)),
        RingKind::GaussianRational => Value::Gauss(rat_int(n), BigRational::zero()),
        RingKind::Modular(p) => {
            let r = n.rem_euclid(*p as i64);
            Value::Mod(r as u64)
        }
        RingKind::Dual(inner) => {
            Value::Dual(Box::new(int_value(inner, n)), Box::new(zero_value(inner)))
        }
    }
}

fn v_is_zero(v: &Value) -> bool {
    match v {
        Value::Rat(r) => r.is_zero(),
        Value::Gauss(re, im) => re.is_zero() && im.is_zero(),
        Value::Mod(m) => *m == 0,
        Value::Dual(u, e) => v_is_zero(u) && v_is_zero(e),
    }
}

fn v_add(kind: &RingKind, a: &Value, b: &Value) -> Value {
    match (kind, a, b) {
        (RingKind::Rational, Value::Rat(x), Value::Rat(y)) => Value::Rat(x + y),
        (RingKind::GaussianRational, Value::Gauss(xr, xi), Value::Gauss(yr, yi)) => {
            Value::Gauss(xr + yr, xi + yi)
        }
        (RingKind::Modular(p), Value::Mod(x), Value::Mod(y)) => Value::Mod((x + y) % p),
        (RingKind::Dual(inner), Value::Dual(xu, xe), Value::Dual(yu, ye)) => Value::Dual(
            Box::new(v_add(inner, xu, yu)),
            Box::new(v_add(inner, xe, ye)),
        ),
        _ => unreachable!("value shape does not match ring kind"),
    }
}

fn v_neg(kind: &RingKind, a: &Value) -> Value {
    match (kind, a) {
        (RingKind::Rational, Value::Rat(x)) => Value::Rat(-x),
        (RingKind::GaussianRational, Value::Gauss(re, im)) => Value::Gauss(-re, -im),
        (RingKind::Modular(p), Value::Mod(x)) => Value::Mod(if *x == 0 { 0 } else { p - x }),
        (RingKind::Dual(inner), Value::Dual(u, e)) => {
            Value::Dual(Box::new(v_neg(inner, u)), Box::new(v_neg(inner, e)))
        }
        _ => unreachable!("value shape does not match ring kind"),
    }
}

fn v_mul(kind: &RingKind, a: &Value, b: &Value) -> Value {
    match (kind, a, b) {
        (RingKind::Rational, Value::Rat(x), Value::Rat(y)) => Value::Rat(x * y),
        (RingKind::GaussianRational, Value::Gauss(xr, xi), Value::Gauss(yr, yi)) => {
            Value::Gauss(xr * yr - xi * yi, xr * yi + xi * yr)
        }
        (RingKind::Modular(p), Value::Mod(x), Value::Mod(y)) => {
            Value::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
        }
        // (u + e a)(v + e b) = uv + e (ub + av)
        (RingKind::Dual(inner), Value::Dual(xu, xe), Value::Dual(yu, ye)) => Value::Dual(
            Box::new(v_mul(inner, xu, yu)),
            Box::new(v_add(inner, &v_mul(inner, xu, ye), &v_mul(inner, xe, yu))),
        ),
        _ => unreachable!("value shape does not match ring kind"),
    }
}

fn v_is_unit(kind: &RingKind, a: &Value) -> bool {
    match (kind, a) {
        (RingKind::Rational, Value::Rat(x)) => !x.is_zero(),
        (RingKind::GaussianRational, Value::Gauss(re, im)) => !(re.is_zero() && im.is_zero()),
        (RingKind::Modular(_), Value::Mod(x)) => *x != 0,
        // Dual rings are local: base part a unit decides invertibility.
        (RingKind::Dual(inner), Value::Dual(u, _)) => v_is_unit(inner, u),
        _ => unreachable!("value shape does not match ring kind"),
    }
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(p as i128) as u64)
}

fn v_invert(kind: &RingKind, a: &Value) -> Option<Value> {
    match (kind, a) {
        (RingKind::Rational, Value::Rat(x)) => {
            if x.is_zero() {
                None
            } else {
                Some(Value::Rat(x.recip()))
            }
        }
        (RingKind::GaussianRational, Value::Gauss(re, im)) => {
            let norm = re * re + im * im;
            if norm.is_zero() {
                None
            } else {
                Some(Value::Gauss(re / &norm, -(im / &norm)))
            }
        }
        (RingKind::Modular(p), Value::Mod(x)) => mod_inverse(*x, *p).map(Value::Mod),
        // (u + e v)^-1 = u^-1 - e u^-2 v
        (RingKind::Dual(inner), Value::Dual(u, e)) => {
            let iu = v_invert(inner, u)?;
            let iu2 = v_mul(inner, &iu, &iu);
            let eps = v_neg(inner, &v_mul(inner, &iu2, e));
            Some(Value::Dual(Box::new(iu), Box::new(eps)))
        }
        _ => unreachable!("value shape does not match ring kind"),
    }
}

fn v_conj(kind: &RingKind, a: &Value) -> Value {
    match (kind, a) {
        (RingKind::Rational, v) => v.clone(),
        (RingKind::GaussianRational, Value::Gauss(re, im)) => Value::Gauss(re.clone(), -im),
        (RingKind::Modular(_), v) => v.clone(),
        (RingKind::Dual(inner), Value::Dual(u, e)) => Value::Dual(
            Box::new(v_conj(inner, u)),
            Box::new(v_conj(inner, e)),
        ),
        _ => unreachable!("value shape does not match ring kind"),
    }
}

impl Scalar {
    pub fn zero(desc: &RingDescriptor) -> Self {
        Scalar { desc: desc.clone(), value: zero_value(desc.kind()) }
    }

    pub fn one(desc: &RingDescriptor) -> Self {
        Scalar::from_integer(desc, 1)
    }

    pub fn from_integer(desc: &RingDescriptor, n: i64) -> Self {
        Scalar { desc: desc.clone(), value: int_value(desc.kind(), n) }
    }

    /// `num/den` embedded into any catalogue ring; `den` must be a unit there.
    pub fn from_ratio(desc: &RingDescriptor, num: i64, den: i64) -> Self {
        let d = Scalar::from_integer(desc, den)
            .invert()
            .expect("denominator must be a unit in the target ring");
        Scalar::from_integer(desc, num).mul(&d)
    }

    /// `1/2`, used throughout the Jordan-theoretic formulas.
    pub fn half(desc: &RingDescriptor) -> Self {
        Scalar::from_ratio(desc, 1, 2)
    }

    /// The imaginary unit of a Gaussian-rational layer at the top level.
    pub fn i(desc: &RingDescriptor) -> Result<Self, RingError> {
        match desc.kind() {
            RingKind::GaussianRational => Ok(Scalar {
                desc: desc.clone(),
                value: Value::Gauss(BigRational::zero(), BigRational::one()),
            }),
            RingKind::Dual(_) => {
                let base = desc.dual_base()?;
                Ok(Scalar::i(&base)?.embed_dual())
            }
            _ => Err(RingError::Parse(format!("ring {desc} has no imaginary unit"))),
        }
    }

    /// The nilpotent generator `e` of a dual-number ring.
    pub fn eps(desc: &RingDescriptor) -> Result<Self, RingError> {
        let base = desc.dual_base()?;
        Ok(Scalar {
            desc: desc.clone(),
            value: Value::Dual(
                Box::new(zero_value(base.kind())),
                Box::new(int_value(base.kind(), 1)),
            ),
        })
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.desc
    }

    pub fn is_zero(&self) -> bool {
        v_is_zero(&self.value)
    }

    pub fn is_one(&self) -> bool {
        self == &Scalar::one(&self.desc)
    }

    pub fn is_unit(&self) -> bool {
        v_is_unit(self.desc.kind(), &self.value)
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.desc, other.desc,
            "descriptor mismatch: {} vs {}",
            self.desc, other.desc
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        Scalar { desc: self.desc.clone(), value: v_add(self.desc.kind(), &self.value, &other.value) }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar { desc: self.desc.clone(), value: v_neg(self.desc.kind(), &self.value) }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        Scalar { desc: self.desc.clone(), value: v_mul(self.desc.kind(), &self.value, &other.value) }
    }

    pub fn invert(&self) -> Result<Scalar, RingError> {
        v_invert(self.desc.kind(), &self.value)
            .map(|value| Scalar { desc: self.desc.clone(), value })
            .ok_or_else(|| RingError::NotAUnit(self.to_string()))
    }

    /// Apply the descriptor's involution (the identity involution is a no-op).
    pub fn conjugate(&self) -> Scalar {
        match self.desc.involution() {
            Involution::Identity => self.clone(),
            Involution::Conjugation => Scalar {
                desc: self.desc.clone(),
                value: v_conj(self.desc.kind(), &self.value),
            },
        }
    }

    /// Embed `K -> K[e]` as the base part.
    pub fn embed_dual(&self) -> Scalar {
        let desc = RingDescriptor::dual(&self.desc);
        Scalar {
            desc,
            value: Value::Dual(Box::new(self.value.clone()), Box::new(zero_value(self.desc.kind()))),
        }
    }

    /// Split a dual-number scalar into `(base, eps)` parts.
    pub fn parts(&self) -> Result<(Scalar, Scalar), RingError> {
        match &self.value {
            Value::Dual(u, e) => {
                let base = self.desc.dual_base()?;
                Ok((
                    Scalar { desc: base.clone(), value: (**u).clone() },
                    Scalar { desc: base, value: (**e).clone() },
                ))
            }
            _ => Err(RingError::NotDual(self.desc.to_string())),
        }
    }

    /// Split a Gaussian-rational scalar into rational `(re, im)` parts.
    pub fn gauss_parts(&self) -> Result<(Scalar, Scalar), RingError> {
        match &self.value {
            Value::Gauss(re, im) => {
                let q = RingDescriptor::rational();
                Ok((
                    Scalar { desc: q.clone(), value: Value::Rat(re.clone()) },
                    Scalar { desc: q, value: Value::Rat(im.clone()) },
                ))
            }
            _ => Err(RingError::Parse(format!(
                "ring {} has no real/imaginary split",
                self.desc
            ))),
        }
    }

    /// Assemble `re + im*i` in a Gaussian-rational ring from rational parts.
    pub fn gauss_from_parts(
        desc: &RingDescriptor,
        re: &Scalar,
        im: &Scalar,
    ) -> Result<Scalar, RingError> {
        if !matches!(desc.kind(), RingKind::GaussianRational) {
            return Err(RingError::Parse(format!("ring {desc} is not Gaussian")));
        }
        match (&re.value, &im.value) {
            (Value::Rat(a), Value::Rat(b)) => Ok(Scalar {
                desc: desc.clone(),
                value: Value::Gauss(a.clone(), b.clone()),
            }),
            _ => Err(RingError::Parse("parts must be plain rationals".into())),
        }
    }

    /// Parse a scalar literal in the format produced by `Display`.
    pub fn parse(desc: &RingDescriptor, text: &str) -> Result<Scalar, RingError> {
        let value = parse_value(desc.kind(), text.trim())?;
        Ok(Scalar { desc: desc.clone(), value })
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

fn rat_string(r: &BigRational) -> String {
    r.to_string()
}

/// Render the imaginary term of `re + im*i` (without the sign of `im`).
fn imag_term(im: &BigRational) -> String {
    let a = im.abs();
    if a.is_one() {
        "i".to_string()
    } else {
        format!("{}i", rat_string(&a))
    }
}

/// Number of dual layers in a ring kind.
fn dual_depth(kind: &RingKind) -> usize {
    match kind {
        RingKind::Dual(inner) => 1 + dual_depth(inner),
        _ => 0,
    }
}

/// Epsilon symbol for a dual layer over `inner`: `e` at depth one, then
/// `e1`, `e2`, ... further out, so nested displays stay unambiguous.
fn dual_symbol(inner: &RingKind) -> String {
    match dual_depth(inner) {
        0 => "e".to_string(),
        n => format!("e{n}"),
    }
}

fn value_string(kind: &RingKind, v: &Value) -> String {
    match (kind, v) {
        (RingKind::Rational, Value::Rat(r)) => rat_string(r),
        (RingKind::GaussianRational, Value::Gauss(re, im)) => {
            if im.is_zero() {
                rat_string(re)
            } else if re.is_zero() {
                if im.is_negative() {
                    format!("-{}", imag_term(im))
                } else {
                    imag_term(im)
                }
            } else if im.is_negative() {
                format!("{}-{}", rat_string(re), imag_term(im))
            } else {
                format!("{}+{}", rat_string(re), imag_term(im))
            }
        }
        (RingKind::Modular(_), Value::Mod(m)) => m.to_string(),
        (RingKind::Dual(inner), Value::Dual(u, e)) => {
            let base = value_string(inner, u);
            if v_is_zero(e) {
                return base;
            }
            let sym = dual_symbol(inner);
            let eps = value_string(inner, e);
            let eps_term = if eps == "1" {
                sym
            } else if eps == "-1" {
                format!("-{sym}")
            } else if is_atom(&eps) {
                format!("{eps}{sym}")
            } else {
                format!("({eps}){sym}")
            };
            if v_is_zero(u) {
                eps_term
            } else {
                let base_part = if is_atom(&base) { base } else { format!("({base})") };
                if eps_term.starts_with('-') {
                    format!("{base_part}{eps_term}")
                } else {
                    format!("{base_part}+{eps_term}")
                }
            }
        }
        _ => unreachable!("value shape does not match ring kind"),
    }
}

/// No top-level `+`/`-` separator, so the string can be used without parens.
fn is_atom(s: &str) -> bool {
    let mut depth = 0usize;
    for (idx, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && idx > 0 => return false,
            _ => {}
        }
    }
    true
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", value_string(self.desc.kind(), &self.value))
    }
}

fn strip_outer_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        let inner = &s[1..s.len() - 1];
        let mut depth = 0i64;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if depth < 0 {
                return s;
            }
        }
        if depth == 0 {
            return inner;
        }
    }
    s
}

/// Index of the last top-level `+`/`-` usable as a binary separator.
fn last_top_level_sign(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    let mut depth = 0i64;
    let mut found = None;
    for (idx, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && idx > 0 => {
                // not a separator when it follows another operator (e.g. "3/-4" cannot occur)
                found = Some(idx);
            }
            _ => {}
        }
    }
    found
}

fn parse_rat(s: &str) -> Result<BigRational, RingError> {
    s.parse::<BigRational>()
        .map_err(|_| RingError::Parse(format!("bad rational literal: {s}")))
}

fn parse_gauss(s: &str) -> Result<(BigRational, BigRational), RingError> {
    let s = strip_outer_parens(s);
    fn term(t: &str) -> Result<(BigRational, BigRational), RingError> {
        let t = t.trim();
        if let Some(coeff) = t.strip_suffix('i') {
            let coeff = coeff.trim();
            let c = if coeff.is_empty() || coeff == "+" {
                BigRational::one()
            } else if coeff == "-" {
                -BigRational::one()
            } else {
                parse_rat(coeff)?
            };
            Ok((BigRational::zero(), c))
        } else {
            Ok((parse_rat(t)?, BigRational::zero()))
        }
    }
    match last_top_level_sign(s) {
        Some(idx) => {
            let (lhs, rhs) = (&s[..idx], &s[idx..]);
            let (lr, li) = term(lhs)?;
            let (rr, ri) = term(rhs)?;
            Ok((lr + rr, li + ri))
        }
        None => term(s),
    }
}

fn parse_value(kind: &RingKind, s: &str) -> Result<Value, RingError> {
    match kind {
        RingKind::Rational => Ok(Value::Rat(parse_rat(strip_outer_parens(s))?)),
        RingKind::GaussianRational => {
            let (re, im) = parse_gauss(s)?;
            Ok(Value::Gauss(re, im))
        }
        RingKind::Modular(p) => {
            let s = strip_outer_parens(s);
            let n: i64 = s
                .parse()
                .map_err(|_| RingError::Parse(format!("bad residue literal: {s}")))?;
            Ok(Value::Mod(n.rem_euclid(*p as i64) as u64))
        }
        RingKind::Dual(inner) => {
            let s = strip_outer_parens(s);
            let sym = dual_symbol(inner);
            // split "base+<coeff>SYM" at the last top-level sign; otherwise
            // the whole string is either a pure epsilon term or a pure base.
            let (base_str, eps_str) = match last_top_level_sign(s) {
                Some(idx) if s.ends_with(sym.as_str()) => (&s[..idx], &s[idx..]),
                _ => ("", s),
            };
            if eps_str.ends_with(sym.as_str()) {
                let coeff = eps_str[..eps_str.len() - sym.len()].trim();
                let coeff = coeff.strip_prefix('+').unwrap_or(coeff);
                let eps_val = if coeff.is_empty() {
                    int_value(inner, 1)
                } else if coeff == "-" {
                    int_value(inner, -1)
                } else {
                    parse_value(inner, coeff)?
                };
                let base_val = if base_str.is_empty() {
                    zero_value(inner)
                } else {
                    parse_value(inner, base_str)?
                };
                Ok(Value::Dual(Box::new(base_val), Box::new(eps_val)))
            } else {
                // no epsilon part at all
                let base_val = parse_value(inner, s)?;
                Ok(Value::Dual(Box::new(base_val), Box::new(zero_value(inner))))
            }
        }
    }
}
