//! The Prüfer module `Z_{p^∞}` over `Z[c, c⁻¹]` with `c` acting as `1 − p`.
//!
//! Elements are kept exactly as `num / p^k mod 1` in lowest terms, so the
//! infinite colimit costs nothing. The finite stages `M_k = Z_{p^k}` embed
//! via `l ↦ p·l`.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrueferElement {
    p: u64,
    num: BigUint,
    k: u32,
}

fn odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    Ok(())
}

impl PrueferElement {
    /// `num / p^k mod 1`.
    pub fn new(p: u64, num: impl Into<BigInt>, k: u32) -> Result<Self> {
        odd_prime(p)?;
        Ok(Self::normalised(p, num.into(), k))
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(p, 0, 0)
    }

    fn normalised(p: u64, num: BigInt, mut k: u32) -> Self {
        let modulus = BigInt::from(p).pow(k);
        let mut num = ((num % &modulus) + &modulus) % &modulus;
        let pb = BigInt::from(p);
        while k > 0 && (&num % &pb).is_zero() {
            num /= &pb;
            k -= 1;
        }
        if num.is_zero() {
            k = 0;
        }
        PrueferElement {
            p,
            num: num.to_biguint().expect("reduced into [0, p^k)"),
            k,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    /// Exponent of the reduced denominator; the element has order `p^k`.
    pub fn exponent(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn signed(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.num.clone())
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let k = self.k.max(other.k);
        let p = BigInt::from(self.p);
        let num = self.signed() * p.pow(k - self.k) + other.signed() * p.pow(k - other.k);
        Ok(Self::normalised(self.p, num, k))
    }

    pub fn neg(&self) -> Self {
        Self::normalised(self.p, -self.signed(), self.k)
    }

    pub fn mul_int(&self, n: impl Into<BigInt>) -> Self {
        Self::normalised(self.p, self.signed() * n.into(), self.k)
    }

    /// `c·m = (1 − p)·m`.
    pub fn act_c(&self) -> Self {
        self.mul_int(1 - self.p as i64)
    }

    /// `c⁻¹·m`; `1 − p` is a unit modulo every power of `p`.
    pub fn act_c_inverse(&self) -> Self {
        if self.k == 0 {
            return self.clone();
        }
        let modulus = BigInt::from(self.p).pow(self.k);
        let unit = (BigInt::one() - BigInt::from(self.p) + &modulus) % &modulus;
        let inv = unit.modinv(&modulus).expect("1 - p is a unit mod p^k");
        self.mul_int(inv)
    }

    /// `u(m) = p·m`.
    pub fn u_map(&self) -> Self {
        self.mul_int(self.p)
    }

    /// An explicit `x` with `p·x = self`.
    pub fn u_preimage(&self) -> Self {
        Self::normalised(self.p, self.signed(), self.k + 1)
    }

    /// An explicit `x` with `(c − 1)·x = self`; `c − 1` acts as `−p`.
    pub fn c_minus_one_preimage(&self) -> Self {
        self.u_preimage().neg()
    }

    /// `(c − 1)·m`.
    pub fn c_minus_one(&self) -> Self {
        self.act_c().add(&self.neg()).expect("same prime")
    }

    /// The element `l / p^k`, the image of `l ∈ Z_{p^k}` in the colimit.
    pub fn from_stage(p: u64, l: u64, k: u32) -> Result<Self> {
        Self::new(p, l, k)
    }
}

impl fmt::Display for PrueferElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}^{}", self.num, self.p, self.k)
        }
    }
}

/// The kernel of `u`: `{l/p : 0 ≤ l < p}`.
pub fn u_kernel(p: u64) -> Result<Vec<PrueferElement>> {
    (0..p).map(|l| PrueferElement::new(p, l, 1)).collect()
}

/// Stage inclusion `Z_{p^k} → Z_{p^{k+1}}`, `l ↦ p·l`.
pub fn include_stage(p: u64, l: u64, k: u32) -> u64 {
    (p * l) % p.pow(k + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageHomology {
    pub k: u32,
    /// Order of `ker(c − 1)` on `Z_{p^k}`.
    pub hopf_order: u64,
    /// Order of `ker(p·)` on `Z_{p^k}`, by brute force.
    pub torsion_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrueferReport {
    pub p: u64,
    pub k_max: u32,
    /// Number of elements for which both preimages were found and verified.
    pub perfectness_witnesses: usize,
    pub perfect: bool,
    pub kernel_order: usize,
    pub kernel_fixed_by_c: bool,
    pub stages: Vec<StageHomology>,
    pub stage_inclusions_commute: bool,
}

impl PrueferReport {
    pub fn all_hold(&self) -> bool {
        self.perfect
            && self.kernel_order as u64 == self.p
            && self.kernel_fixed_by_c
            && self.stage_inclusions_commute
            && self
                .stages
                .iter()
                .all(|s| s.hopf_order == self.p && s.torsion_order == self.p)
    }
}

impl fmt::Display for PrueferReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes = |b: bool| if b { "yes" } else { "NO" };
        writeln!(f, "Prüfer module p = {}, stages k = 1..{}", self.p, self.k_max)?;
        writeln!(
            f,
            "  perfect ((c-1)M = pM = M): {} ({} witnesses)",
            yes(self.perfect),
            self.perfectness_witnesses
        )?;
        writeln!(f, "  |Ker(u)| = {}", self.kernel_order)?;
        writeln!(
            f,
            "  c acts trivially on Ker(u) (central): {}",
            yes(self.kernel_fixed_by_c)
        )?;
        for s in &self.stages {
            writeln!(
                f,
                "  stage k = {}: |H2| = {} (ker(c-1)), |ker(p·)| = {}",
                s.k, s.hopf_order, s.torsion_order
            )?;
        }
        writeln!(
            f,
            "  stage inclusions commute with c and u: {}",
            yes(self.stage_inclusions_commute)
        )?;
        write!(f, "  universality of u: not verified (infinite module)")
    }
}

/// Largest stage order enumerated exhaustively.
pub const BRUTE_FORCE_LIMIT: u64 = 1 << 22;

/// Runs the finitary checks on `Z_{p^∞}` for stages `1..=k_max`.
pub fn check_pruefer(p: u64, k_max: u32) -> Result<PrueferReport> {
    odd_prime(p)?;
    if p.checked_pow(k_max + 1).is_none_or(|n| n > BRUTE_FORCE_LIMIT) {
        return Err(Error::Format(format!("p^(k_max+1) exceeds {BRUTE_FORCE_LIMIT}")));
    }
    let mut witnesses = 0;
    let mut perfect = true;
    let mut stages = Vec::new();
    let mut inclusions = true;
    for k in 1..=k_max {
        let order = p.pow(k);
        let mut hopf = 0;
        let mut torsion = 0;
        for l in 0..order {
            let x = PrueferElement::from_stage(p, l, k)?;
            let via_u = x.u_preimage();
            let via_c = x.c_minus_one_preimage();
            if via_u.u_map() == x && via_c.c_minus_one() == x {
                witnesses += 1;
            } else {
                perfect = false;
            }
            // Stage arithmetic in Z_{p^k}.
            let c_l = (l * (order + 1 - p % order)) % order;
            if (c_l + order - l).is_multiple_of(order) {
                hopf += 1;
            }
            if (p * l).is_multiple_of(order) {
                torsion += 1;
            }
            let next = p.pow(k + 1);
            let inc = include_stage(p, l, k);
            let u_then_inc = include_stage(p, (p * l) % order, k);
            let inc_then_u = (p * inc) % next;
            let c_then_inc = include_stage(p, c_l, k);
            let inc_then_c = (inc * (next + 1 - p)) % next;
            let same_element = PrueferElement::from_stage(p, inc, k + 1)? == x;
            if u_then_inc != inc_then_u || c_then_inc != inc_then_c || !same_element {
                inclusions = false;
            }
        }
        stages.push(StageHomology {
            k,
            hopf_order: hopf,
            torsion_order: torsion,
        });
    }
    let kernel = u_kernel(p)?;
    let kernel_order = kernel.iter().filter(|x| x.u_map().is_zero()).count();
    let kernel_fixed_by_c = kernel.iter().all(|x| x.act_c() == *x);
    Ok(PrueferReport {
        p,
        k_max,
        perfectness_witnesses: witnesses,
        perfect,
        kernel_order,
        kernel_fixed_by_c,
        stages,
        stage_inclusions_commute: inclusions,
    })
}
