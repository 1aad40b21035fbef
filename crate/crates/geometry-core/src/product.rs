//! Direct products of geometries, including twisted products where one
//! factor contributes its dual (points and co-points swapped).  Everything
//! is componentwise; the twisted square of a geometry carries the exchange
//! involution, which swaps the two slots and is structural for the
//! componentwise combination maps.

use rand::Rng;
use ring_core::{sample_scalar, CheckOutcome, Scalar};

use crate::error::GeomError;
use crate::geometry::{Geometry, GrasCoPoint, GrasPoint};
use crate::laws::sample_until;

/// One inhabitant of one factor: a point or a co-point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Point(GrasPoint),
    CoPoint(GrasCoPoint),
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Element::Point(x) => write!(f, "{x}"),
            Element::CoPoint(a) => write!(f, "{a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Factor {
    flipped: bool,
}

pub struct ProductGeometry {
    left: Geometry,
    right: Geometry,
    left_factor: Factor,
    right_factor: Factor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductElement {
    pub left: Element,
    pub right: Element,
}

impl std::fmt::Display for ProductElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

fn sample_side<R: Rng>(geo: &Geometry, factor: Factor, plus: bool, rng: &mut R) -> Element {
    if plus != factor.flipped {
        Element::Point(geo.sample_point(rng))
    } else {
        Element::CoPoint(geo.sample_copoint(rng))
    }
}

fn side_transversal(geo: &Geometry, plus: &Element, minus: &Element) -> Result<bool, GeomError> {
    match (plus, minus) {
        (Element::Point(x), Element::CoPoint(a)) | (Element::CoPoint(a), Element::Point(x)) => {
            Ok(geo.transversal(x, a))
        }
        _ => Err(GeomError::DimMismatch(
            "product slots must pair a point with a co-point".into(),
        )),
    }
}

fn side_pi(
    geo: &Geometry,
    x: &Element,
    a: &Element,
    y: &Element,
    r: &Scalar,
) -> Result<Element, GeomError> {
    match (x, a, y) {
        (Element::Point(x), Element::CoPoint(a), Element::Point(y)) => {
            Ok(Element::Point(geo.pi_r(x, a, y, r)?))
        }
        (Element::CoPoint(x), Element::Point(a), Element::CoPoint(y)) => {
            Ok(Element::CoPoint(geo.pi_r_minus(x, a, y, r)?))
        }
        _ => Err(GeomError::DimMismatch(
            "product slots must pair a point with a co-point".into(),
        )),
    }
}

impl ProductGeometry {
    /// Plain componentwise product of two geometries over one ring.
    pub fn product(left: Geometry, right: Geometry) -> Result<Self, GeomError> {
        if left.ring() != right.ring() {
            return Err(GeomError::InvalidGeometry(
                "product factors must share a ring".into(),
            ));
        }
        Ok(ProductGeometry {
            left,
            right,
            left_factor: Factor { flipped: false },
            right_factor: Factor { flipped: false },
        })
    }

    /// The twisted square: the second factor contributes its dual, so a
    /// plus element is a (point, co-point) pair.
    pub fn twisted_square(geo: Geometry) -> Self {
        ProductGeometry {
            left: geo.clone(),
            right: geo,
            left_factor: Factor { flipped: false },
            right_factor: Factor { flipped: true },
        }
    }

    pub fn sample_plus<R: Rng>(&self, rng: &mut R) -> ProductElement {
        ProductElement {
            left: sample_side(&self.left, self.left_factor, true, rng),
            right: sample_side(&self.right, self.right_factor, true, rng),
        }
    }

    pub fn sample_minus<R: Rng>(&self, rng: &mut R) -> ProductElement {
        ProductElement {
            left: sample_side(&self.left, self.left_factor, false, rng),
            right: sample_side(&self.right, self.right_factor, false, rng),
        }
    }

    /// Componentwise: transversal exactly when every slot is.
    pub fn transversal(&self, plus: &ProductElement, minus: &ProductElement) -> Result<bool, GeomError> {
        Ok(side_transversal(&self.left, &plus.left, &minus.left)?
            && side_transversal(&self.right, &plus.right, &minus.right)?)
    }

    pub fn pi_r(
        &self,
        x: &ProductElement,
        a: &ProductElement,
        y: &ProductElement,
        r: &Scalar,
    ) -> Result<ProductElement, GeomError> {
        Ok(ProductElement {
            left: side_pi(&self.left, &x.left, &a.left, &y.left, r)?,
            right: side_pi(&self.right, &x.right, &a.right, &y.right, r)?,
        })
    }

    /// The exchange involution of the twisted square: swap the slots.
    pub fn exchange(&self, e: &ProductElement) -> ProductElement {
        ProductElement { left: e.right.clone(), right: e.left.clone() }
    }
}

/// First law on the product, evaluated componentwise by rejection sampling.
pub fn check_product_pg1<R: Rng>(
    pg: &ProductGeometry,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, GeomError> {
    let ring = pg.left.ring().clone();
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let (witness, lhs, rhs) = sample_until(|| {
            let o = pg.sample_plus(rng);
            let x = pg.sample_plus(rng);
            let y = pg.sample_plus(rng);
            let alpha = pg.sample_minus(rng);
            let beta = pg.sample_minus(rng);
            let r = sample_scalar(&ring, rng);
            let s = sample_scalar(&ring, rng);
            let eval = || -> Result<(ProductElement, ProductElement), GeomError> {
                let gamma = pg.pi_r(&alpha, &o, &beta, &r)?;
                let inner = pg.pi_r(&x, &gamma, &y, &s)?;
                let lhs = pg.pi_r(&o, &alpha, &inner, &r)?;
                let gx = pg.pi_r(&o, &alpha, &x, &r)?;
                let gy = pg.pi_r(&o, &alpha, &y, &r)?;
                let rhs = pg.pi_r(&gx, &beta, &gy, &s)?;
                Ok((lhs, rhs))
            };
            let (lhs, rhs) = eval().ok()?;
            Some((format!("o={o} alpha={alpha} x={x} y={y} r={r} s={s}"), lhs, rhs))
        })?;
        out.record(lhs == rhs, || format!("first law fails on the product at {witness}"));
    }
    Ok(out)
}

/// Exchange involution: order two, transversality-preserving, structural.
pub fn check_exchange<R: Rng>(
    geo: &Geometry,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, GeomError> {
    let pg = ProductGeometry::twisted_square(geo.clone());
    let ring = geo.ring().clone();
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let x = pg.sample_plus(rng);
        out.record(pg.exchange(&pg.exchange(&x)) == x, || {
            format!("exchange applied twice moved {x}")
        });
        let a = pg.sample_minus(rng);
        let direct = pg.transversal(&x, &a).expect("slots typed by construction");
        let swapped = pg
            .transversal(&pg.exchange(&a), &pg.exchange(&x))
            .expect("slots typed by construction");
        out.record(direct == swapped, || {
            format!("exchange broke transversality of {x} and {a}")
        });
    }
    for _ in 0..samples {
        let (witness, lhs, rhs) = sample_until(|| {
            let x = pg.sample_plus(rng);
            let y = pg.sample_plus(rng);
            let a = pg.sample_minus(rng);
            let r = sample_scalar(&ring, rng);
            let combined = pg.pi_r(&x, &a, &y, &r).ok()?;
            let lhs = pg.exchange(&combined);
            let rhs = pg
                .pi_r(&pg.exchange(&x), &pg.exchange(&a), &pg.exchange(&y), &r)
                .ok()?;
            Some((format!("x={x} a={a} y={y} r={r}"), lhs, rhs))
        })?;
        out.record(lhs == rhs, || format!("exchange is not structural at {witness}"));
    }
    Ok(out)
}
