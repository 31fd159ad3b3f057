use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Q;

/// Univariate polynomial over the rationals, coefficients low degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Q>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn monic(&self) -> RatPoly {
        match self.coeffs.last() {
            Some(lead) => RatPoly::new(self.coeffs.iter().map(|c| c / lead).collect()),
            None => self.clone(),
        }
    }

    /// Quotient and remainder of polynomial long division.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (RatPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![Q::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> RatPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Distinct rational roots in increasing order, plus the degree of the
    /// squarefree cofactor that has no rational roots (zero when the
    /// polynomial splits over the rationals).
    pub fn rational_roots(&self) -> (Vec<Q>, usize) {
        let mut p = self.squarefree_part();
        let mut roots = Vec::new();
        if p.degree().unwrap_or(0) == 0 {
            return (roots, 0);
        }
        if p.coeffs[0].is_zero() {
            roots.push(Q::zero());
            p = p.div_rem(&RatPoly::new(vec![Q::zero(), Q::one()])).0;
        }
        // Integer primitive form: candidates p/q with p | a0, q | lead.
        let l = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let a0 = ints[0].abs();
        let lead = ints.last().expect("nonzero polynomial").abs();
        if p.degree().unwrap_or(0) > 0 {
            for num in divisors(&a0) {
                for den in divisors(&lead) {
                    for sign in [1i64, -1] {
                        let cand = Q::new(&num * BigInt::from(sign), den.clone());
                        if p.degree().unwrap_or(0) > 0 && p.eval(&cand).is_zero() {
                            roots.push(cand.clone());
                            p = p.div_rem(&RatPoly::new(vec![-cand, Q::one()])).0;
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        (roots, p.degree().unwrap_or(0))
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
