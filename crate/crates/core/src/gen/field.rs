use crate::error::{Error, Result};

/// Arithmetic tables for GF(q), `q = p^k ≤ 128`.
///
/// Element `i` encodes the polynomial `Σ c_j x^j` with `i = Σ c_j p^j`
/// (`0 ≤ c_j < p`), reduced modulo the least monic irreducible of degree `k`,
/// where monic polynomials are ordered by the integer value of their lower
/// coefficients in this same encoding. For `k = 1` this is plain arithmetic mod `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    q: usize,
    p: usize,
    k: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    square: Vec<bool>,
    modulus: Vec<usize>,
}

pub const MAX_FIELD_ORDER: usize = 128;

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
fn decode(mut x: usize, p: usize, k: usize) -> Vec<usize> {
    let mut c = vec![0; k];
    for ci in c.iter_mut() {
        *ci = x % p;
        x /= p;
    }
    c
}

fn encode(c: &[usize], p: usize) -> usize {
    c.iter().rev().fold(0, |acc, &ci| acc * p + ci)
}

fn poly_rem(mut a: Vec<usize>, m: &[usize], p: usize) -> Vec<usize> {
    // m is monic
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - (lead * mi) % p) % p;
            }
        }
    }
    a
}

fn is_irreducible(m: &[usize], p: usize) -> bool {
    let k = m.len() - 1;
    // trial division by every monic polynomial of degree 1..=k/2
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) {
            let mut f = decode(low, p, d);
            f.push(1);
            if poly_rem(m.to_vec(), &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let modulus = (0..p.pow(k as u32))
            .map(|low| {
                let mut m = decode(low, p, k);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial exists for every degree");
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let ca = decode(a, p, k);
            for b in 0..q {
                let cb = decode(b, p, k);
                let sum: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum, p) as u8;
                let mut prod = vec![0; 2 * k - 1];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = poly_rem(prod, &modulus, p);
                r.resize(k, 0);
                mul[a * q + b] = encode(&r, p) as u8;
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8).collect();
        let mut square = vec![false; q];
        for a in 1..q {
            square[mul[a * q + a] as usize] = true;
        }
        Ok(FiniteField { q, p, k, add, mul, neg, square, modulus })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Coefficients of the defining polynomial, lowest degree first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Whether `a` is a nonzero square.
    #[inline]
    pub fn is_square(&self, a: usize) -> bool {
        self.square[a]
    }

    pub fn squares(&self) -> Vec<usize> {
        (0..self.q).filter(|&a| self.square[a]).collect()
    }
}

/// GF(q) for a prime power `q ≤ 128`.
pub fn make_field(q: usize) -> Result<FiniteField> {
    FiniteField::new(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_mod_five() {
        let f = make_field(5).unwrap();
        // oracle: square every nonzero residue
        let mut sq: Vec<usize> = (1..5).map(|x| x * x % 5).collect();
        sq.sort();
        sq.dedup();
        assert_eq!(f.squares(), sq);
        assert_eq!(f.squares(), vec![1, 4]);
    }

    #[test]
    fn gf9_has_four_squares() {
        let f = make_field(9).unwrap();
        assert_eq!((1..9).count(), 8);
        assert_eq!(f.squares().len(), 4);
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_non_prime_powers_and_large_orders() {
        assert_eq!(make_field(6), Err(Error::NotPrimePower(6)));
        assert_eq!(make_field(1), Err(Error::NotPrimePower(1)));
        assert_eq!(make_field(0), Err(Error::NotPrimePower(0)));
        assert_eq!(make_field(131), Err(Error::FieldTooLarge(131)));
        assert!(make_field(128).is_ok());
    }

    #[test]
    fn field_axioms_hold_exhaustively_up_to_25() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25] {
            let f = make_field(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert!((1..q).any(|b| f.mul(a, b) == 1), "q={q} a={a} has no inverse");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            if q % 2 == 1 {
                assert_eq!(f.squares().len(), (q - 1) / 2);
            }
            if q % 4 == 1 {
                assert!(f.is_square(f.neg(1)));
            }
        }
    }
}
