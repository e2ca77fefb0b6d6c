use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, FieldError};
use super::galois::split_terms;

/// The rational numbers with exact big-integer fractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Result<Vec<BigRational>, FieldError> {
        Err(FieldError::InfiniteField("q".into()))
    }

    fn roots_of(&self, coeffs: &[BigRational]) -> Vec<BigRational> {
        rational_roots(coeffs)
    }

    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational, FieldError> {
        let err = || FieldError::parse("rational", s);
        let mut acc = BigRational::zero();
        for (negative, term) in split_terms(s).ok_or_else(err)? {
            let v = match term.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.parse().map_err(|_| err())?;
                    let d: BigInt = d.parse().map_err(|_| err())?;
                    if d.is_zero() {
                        return Err(FieldError::DivisionByZero);
                    }
                    BigRational::new(n, d)
                }
                None => BigRational::from_integer(term.parse().map_err(|_| err())?),
            };
            acc = if negative { acc - v } else { acc + v };
        }
        Ok(acc)
    }

    fn spec(&self) -> String {
        "q".to_string()
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    if let Some(small) = n.to_u64() {
        let mut d = 1u64;
        while d * d <= small {
            if small % d == 0 {
                out.push(BigInt::from(d));
                if d * d != small {
                    out.push(BigInt::from(small / d));
                }
            }
            d += 1;
        }
    } else {
        let mut d = BigInt::one();
        while &d * &d <= n {
            if n.is_multiple_of(&d) {
                out.push(d.clone());
                if &d * &d != n {
                    out.push(&n / &d);
                }
            }
            d += 1;
        }
    }
    out
}

/// Rational-root search on the primitive integer form.
fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let Some(deg) = coeffs.iter().rposition(|c| !c.is_zero()) else {
        return vec![];
    };
    let lcm = coeffs[..=deg].iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs[..=deg].iter().map(|c| (c * &lcm).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let trimmed = &ints[low..];
    if trimmed.len() > 1 {
        let eval = |x: &BigRational| {
            trimmed
                .iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
        };
        for num in divisors(&trimmed[0]) {
            for den in divisors(trimmed.last().unwrap()) {
                for sign in [1, -1] {
                    let cand = BigRational::new(&num * sign, den.clone());
                    if eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_and_format() {
        let q = Rationals;
        assert_eq!(q.format_elem(&r(-2, 4)), "-1/2");
        assert_eq!(q.parse_elem("-1/2").unwrap(), r(-1, 2));
        assert_eq!(q.parse_elem("3").unwrap(), r(3, 1));
        assert_eq!(q.inv(&r(2, 3)).unwrap(), r(3, 2));
        assert!(q.inv(&r(0, 1)).is_err());
        assert!(matches!(q.elements(), Err(FieldError::InfiniteField(_))));
    }

    #[test]
    fn finds_rational_roots() {
        let q = Rationals;
        // 6y^2 - 5y + 1 = (2y-1)(3y-1)
        let c = vec![r(1, 1), r(-5, 1), r(6, 1)];
        assert_eq!(q.roots_of(&c), vec![r(1, 3), r(1, 2)]);
        // 3y^2 - 1 has no rational root
        assert!(q.roots_of(&[r(-1, 1), r(0, 1), r(3, 1)]).is_empty());
        // y^3 - y/4
        assert_eq!(q.roots_of(&[r(0, 1), r(-1, 4), r(0, 1), r(1, 1)]), vec![r(-1, 2), r(0, 1), r(1, 2)]);
    }
}
