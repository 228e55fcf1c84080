//! Scalars: prime fields `Fp<P>` and the rationals.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{FromPrimitive, Num, One, Zero};

/// Exact field scalars usable by the linear algebra.
pub trait Scalar: Num + Neg<Output = Self> + FromPrimitive + Clone + fmt::Debug + Send + Sync + 'static {}

impl<T> Scalar for T where T: Num + Neg<Output = T> + FromPrimitive + Clone + fmt::Debug + Send + Sync + 'static {}

/// A finite prime field, enumerable and hashable.
pub trait FiniteField: Scalar + Copy + Eq + Ord + Hash + fmt::Display {
    const ORDER: u32;

    fn from_residue(v: u32) -> Self;
    fn residue(self) -> u32;

    fn elements() -> Box<dyn Iterator<Item = Self>> {
        Box::new((0..Self::ORDER).map(Self::from_residue))
    }
}

const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Integers mod a prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const PRIME: () = assert!(is_prime(P), "Fp needs a prime modulus");

    pub fn new(v: u32) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME;
        Fp(v % P)
    }

    pub fn from_i64(v: i64) -> Self {
        Fp::new(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Self {
        assert!(self.0 != 0, "division by zero in F_{}", P);
        self.pow(P - 2)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u32> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "remainder by zero in F_{}", P);
        Fp(0)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u32> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::from_i64)
    }
}

impl<const P: u32> FromPrimitive for Fp<P> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Fp::from_i64(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Fp::new((n % P as u64) as u32))
    }
}

impl<const P: u32> FiniteField for Fp<P> {
    const ORDER: u32 = P;

    fn from_residue(v: u32) -> Self {
        Fp::new(v)
    }

    fn residue(self) -> u32 {
        self.0
    }
}
