use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Build a rational from small integers.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats `p/q`, or just `p` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Coefficient {
    pub re: Rational,
    pub im: Rational,
}

impl Coefficient {
    pub fn new(re: Rational, im: Rational) -> Self {
        Coefficient { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Coefficient {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(rat_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::real(rat(num, den))
    }

    pub fn i() -> Self {
        Coefficient {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Coefficient {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Coefficient {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }

    /// True when the displayed form starts with a minus sign.
    pub fn is_negative_display(&self) -> bool {
        self.re.is_negative() || (self.re.is_zero() && self.im.is_negative())
    }
}

impl Zero for Coefficient {
    fn zero() -> Self {
        Coefficient::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Coefficient {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Coefficient {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, o: &Coefficient) -> Coefficient {
        Coefficient {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, o: &Coefficient) -> Coefficient {
        Coefficient {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, o: &Coefficient) -> Coefficient {
        if self.im.is_zero() && o.im.is_zero() {
            return Coefficient::real(&self.re * &o.re);
        }
        Coefficient {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    /// Panics on division by zero.
    fn div(self, o: &Coefficient) -> Coefficient {
        self * &o.inv().expect("division by zero coefficient")
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, o: Coefficient) -> Coefficient {
        &self + &o
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, o: Coefficient) -> Coefficient {
        &self - &o
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, o: Coefficient) -> Coefficient {
        &self * &o
    }
}

impl Div for Coefficient {
    type Output = Coefficient;
    fn div(self, o: Coefficient) -> Coefficient {
        &self / &o
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, o: &Coefficient) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, o: &Coefficient) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl fmt::Display for Coefficient {
    /// `3`, `-1/2`, `2i`, `-i`, `(1+2i)`, `(1/2-i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag(im: &Rational) -> String {
            if im.is_one() {
                "i".to_string()
            } else if (-im).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", fmt_rational(im))
            }
        }
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "" } else { "+" };
                write!(f, "({}{}{})", fmt_rational(&self.re), sign, imag(&self.im))
            }
        }
    }
}
