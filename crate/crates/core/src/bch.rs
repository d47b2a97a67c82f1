//! Shortened binary BCH codes protecting the two data fields of a frame.
//!
//! BCH-1 shortens the (127,106) code to 61 data + 21 parity bits and
//! corrects up to 3 errors; BCH-2 shortens (63,51) to 26 + 12 and corrects
//! up to 2. Generators are built from first principles — products of
//! minimal polynomials over the parent field — rather than pasted in as
//! opaque constants, so a construction mistake fails the degree and
//! divisibility checks immediately.
//!
//! Polynomials over GF(2) are bitmasks with bit k holding the coefficient
//! of x^k; messages and codewords travel as bit slices, first bit =
//! highest-degree coefficient.

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BchError {
    #[error("{code}: expected {expected}-bit message, got {got}")]
    WrongMessageLength {
        code: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{code}: expected {expected}-bit codeword, got {got}")]
    WrongCodewordLength {
        code: &'static str,
        expected: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Clean,
    Corrected,
    Uncorrectable,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Clean => "clean",
            CheckStatus::Corrected => "corrected",
            CheckStatus::Uncorrectable => "uncorrectable",
        }
    }

    /// Clean or corrected, i.e. the decoded bits are trustworthy.
    pub fn is_usable(&self) -> bool {
        !matches!(self, CheckStatus::Uncorrectable)
    }
}

/// Outcome of checking one codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub status: CheckStatus,
    /// 1-indexed positions within the codeword that were flipped.
    pub error_positions: Vec<usize>,
    /// The codeword after correction (equals the input when clean or
    /// uncorrectable).
    pub corrected_codeword: Vec<u8>,
}

/// One shortened BCH code definition.
#[derive(Debug, Clone)]
pub struct BchCode {
    pub name: &'static str,
    /// Generator polynomial; bit k = coefficient of x^k.
    pub generator: u64,
    pub data_len: usize,
    pub parity_len: usize,
    /// Maximum number of correctable errors.
    pub t: usize,
    /// (n, k) of the unshortened parent code.
    pub parent: (usize, usize),
    /// Syndrome of a single error at each 1-indexed codeword position.
    position_syndromes: Vec<u32>,
    /// Reverse map syndrome -> position for single errors.
    syndrome_to_pos: HashMap<u32, usize>,
}

impl BchCode {
    pub fn codeword_len(&self) -> usize {
        self.data_len + self.parity_len
    }

    /// Generator coefficients MSB (highest degree) first, as '0'/'1' text.
    pub fn generator_bits(&self) -> String {
        (0..=self.parity_len)
            .rev()
            .map(|k| if self.generator >> k & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    fn new(
        name: &'static str,
        generator: u64,
        data_len: usize,
        parity_len: usize,
        t: usize,
        parent: (usize, usize),
    ) -> Self {
        assert_eq!(generator >> parity_len, 1, "degree must equal parity_len");
        assert_eq!(generator & 1, 1, "nonzero constant term required");
        assert!(data_len + parity_len <= parent.0);
        let n = data_len + parity_len;
        let mut position_syndromes = vec![0u32; n + 1];
        let mut syndrome_to_pos = HashMap::with_capacity(n);
        for pos in 1..=n {
            // error polynomial x^(n-pos) reduced mod g
            let syn = poly_mod_u128(1u128 << (n - pos), generator) as u32;
            position_syndromes[pos] = syn;
            syndrome_to_pos.insert(syn, pos);
        }
        BchCode {
            name,
            generator,
            data_len,
            parity_len,
            t,
            parent,
            position_syndromes,
            syndrome_to_pos,
        }
    }

    /// Parity bits for a message: remainder of m(x)·x^parity divided by the
    /// generator, MSB first.
    pub fn parity(&self, message: &[u8]) -> Result<Vec<u8>, BchError> {
        if message.len() != self.data_len {
            return Err(BchError::WrongMessageLength {
                code: self.name,
                expected: self.data_len,
                got: message.len(),
            });
        }
        let mut reg = 0u64;
        let top = 1u64 << self.parity_len;
        for &bit in message {
            reg = (reg << 1) | (bit & 1) as u64;
            if reg & top != 0 {
                reg ^= self.generator;
            }
        }
        for _ in 0..self.parity_len {
            reg <<= 1;
            if reg & top != 0 {
                reg ^= self.generator;
            }
        }
        Ok((0..self.parity_len)
            .rev()
            .map(|k| ((reg >> k) & 1) as u8)
            .collect())
    }

    /// Syndrome of a full codeword (message ++ parity); zero means clean.
    pub fn syndrome(&self, codeword: &[u8]) -> Result<u32, BchError> {
        if codeword.len() != self.codeword_len() {
            return Err(BchError::WrongCodewordLength {
                code: self.name,
                expected: self.codeword_len(),
                got: codeword.len(),
            });
        }
        let mut reg = 0u64;
        let top = 1u64 << self.parity_len;
        for &bit in codeword {
            reg = (reg << 1) | (bit & 1) as u64;
            if reg & top != 0 {
                reg ^= self.generator;
            }
        }
        Ok(reg as u32)
    }

    /// Check a codeword and correct up to `t` errors.
    ///
    /// Error patterns are searched by weight: the syndrome table covers
    /// single errors directly, pairs and triples fall out of one or two
    /// table lookups per candidate. If no pattern of weight ≤ t reproduces
    /// the syndrome the word is reported uncorrectable — never guessed.
    pub fn check_and_correct(&self, codeword: &[u8]) -> Result<CheckResult, BchError> {
        let syn = self.syndrome(codeword)?;
        if syn == 0 {
            return Ok(CheckResult {
                status: CheckStatus::Clean,
                error_positions: Vec::new(),
                corrected_codeword: codeword.to_vec(),
            });
        }
        if let Some(positions) = self.locate_errors(syn) {
            let mut corrected = codeword.to_vec();
            for &p in &positions {
                corrected[p - 1] ^= 1;
            }
            debug_assert_eq!(self.syndrome(&corrected).unwrap(), 0);
            return Ok(CheckResult {
                status: CheckStatus::Corrected,
                error_positions: positions,
                corrected_codeword: corrected,
            });
        }
        Ok(CheckResult {
            status: CheckStatus::Uncorrectable,
            error_positions: Vec::new(),
            corrected_codeword: codeword.to_vec(),
        })
    }

    fn locate_errors(&self, syn: u32) -> Option<Vec<usize>> {
        let n = self.codeword_len();
        // weight 1
        if let Some(&p) = self.syndrome_to_pos.get(&syn) {
            return Some(vec![p]);
        }
        if self.t < 2 {
            return None;
        }
        // weight 2: fix the lower position, look the partner up
        for i in 1..=n {
            let rest = syn ^ self.position_syndromes[i];
            if let Some(&j) = self.syndrome_to_pos.get(&rest) {
                if j > i {
                    return Some(vec![i, j]);
                }
            }
        }
        if self.t < 3 {
            return None;
        }
        // weight 3: fix the two lower positions
        for i in 1..=n {
            let si = syn ^ self.position_syndromes[i];
            for j in i + 1..=n {
                let rest = si ^ self.position_syndromes[j];
                if let Some(&k) = self.syndrome_to_pos.get(&rest) {
                    if k > j {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    }
}

/// The two code definitions used by the frame layout, built once.
pub fn gen_polys() -> (&'static BchCode, &'static BchCode) {
    static CODES: OnceLock<(BchCode, BchCode)> = OnceLock::new();
    let (a, b) = CODES.get_or_init(|| {
        // BCH-1: minimal polynomials of alpha, alpha^3, alpha^5 over GF(2^7),
        // primitive polynomial x^7 + x^3 + 1.
        let f7 = GfField::new(7, 0b1000_1001);
        let g1 = poly_mul_gf2(
            poly_mul_gf2(f7.minimal_poly(1), f7.minimal_poly(3)),
            f7.minimal_poly(5),
        );
        // BCH-2: minimal polynomials of alpha, alpha^3 over GF(2^6),
        // primitive polynomial x^6 + x + 1.
        let f6 = GfField::new(6, 0b100_0011);
        let g2 = poly_mul_gf2(f6.minimal_poly(1), f6.minimal_poly(3));
        (
            BchCode::new("BCH1", g1, 61, 21, 3, (127, 106)),
            BchCode::new("BCH2", g2, 26, 12, 2, (63, 51)),
        )
    });
    (a, b)
}

/// GF(2^m) with a given primitive polynomial (bitmask including the x^m
/// term).
struct GfField {
    m: u32,
    prim: u32,
}

impl GfField {
    fn new(m: u32, prim: u32) -> Self {
        GfField { m, prim }
    }

    fn order(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    fn mul(&self, mut a: u32, mut b: u32) -> u32 {
        let mut r = 0u32;
        while b != 0 {
            if b & 1 != 0 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & (1 << self.m) != 0 {
                a ^= self.prim;
            }
        }
        r
    }

    fn alpha_pow(&self, e: u64) -> u32 {
        let mut r = 1u32;
        for _ in 0..e % self.order() {
            r = self.mul(r, 0b10);
        }
        r
    }

    /// Minimal polynomial of alpha^s as a GF(2) bitmask. Computed as the
    /// product of (x + alpha^j) over the conjugacy class of s; every
    /// coefficient must land in GF(2).
    fn minimal_poly(&self, s: u64) -> u64 {
        let n = self.order();
        let mut coset = Vec::new();
        let mut e = s % n;
        while !coset.contains(&e) {
            coset.push(e);
            e = (e * 2) % n;
        }
        // coefficients in GF(2^m), index = degree
        let mut poly = vec![1u32];
        for &j in &coset {
            let root = self.alpha_pow(j);
            let mut next = vec![0u32; poly.len() + 1];
            for (deg, &c) in poly.iter().enumerate() {
                next[deg + 1] ^= c;
                next[deg] ^= self.mul(c, root);
            }
            poly = next;
        }
        let mut mask = 0u64;
        for (deg, &c) in poly.iter().enumerate() {
            assert!(c <= 1, "minimal polynomial coefficient outside GF(2)");
            mask |= (c as u64) << deg;
        }
        mask
    }
}

/// Carry-less multiply of two GF(2) polynomials.
fn poly_mul_gf2(a: u64, b: u64) -> u64 {
    let mut r = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 != 0 {
            r ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    r
}

/// Remainder of a 128-bit polynomial modulo a 64-bit one, over GF(2).
fn poly_mod_u128(mut a: u128, b: u64) -> u64 {
    let db = 63 - b.leading_zeros() as i32;
    loop {
        let da = 127 - a.leading_zeros() as i32;
        if a == 0 || da < db {
            return a as u64;
        }
        a ^= (b as u128) << (da - db);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Expected generators, frozen from an independent computation of the
    /// minimal-polynomial products (MSB = highest degree).
    const G1_BITS: &str = "1001101101100111100011";
    const G2_BITS: &str = "1010100111001";

    /// Independent long-division oracle used to cross-check the LFSR path.
    fn brute_force_remainder(dividend: &[u8], generator: u64, deg: usize) -> Vec<u8> {
        let mut work = dividend.to_vec();
        let gbits: Vec<u8> = (0..=deg)
            .rev()
            .map(|k| ((generator >> k) & 1) as u8)
            .collect();
        for i in 0..work.len().saturating_sub(deg) {
            if work[i] == 1 {
                for (j, &g) in gbits.iter().enumerate() {
                    work[i + j] ^= g;
                }
            }
        }
        work[work.len() - deg..].to_vec()
    }

    fn random_message(rng: &mut ChaCha8Rng, len: usize) -> Vec<u8> {
        (0..len).map(|_| rng.gen_range(0..2u8)).collect()
    }

    fn codeword_of(code: &BchCode, message: &[u8]) -> Vec<u8> {
        let mut cw = message.to_vec();
        cw.extend(code.parity(message).unwrap());
        cw
    }

    #[test]
    fn generators_match_frozen_constants() {
        let (b1, b2) = gen_polys();
        assert_eq!(b1.generator_bits(), G1_BITS);
        assert_eq!(b2.generator_bits(), G2_BITS);
        assert_eq!(b1.parity_len, 21);
        assert_eq!(b2.parity_len, 12);
    }

    #[test]
    fn bch2_generator_equals_polynomial_product() {
        // (x^6+x+1)(x^6+x^4+x^2+x+1), multiplied here independently
        let product = poly_mul_gf2(0b100_0011, 0b101_0111);
        assert_eq!(gen_polys().1.generator, product);
    }

    #[test]
    fn generators_divide_parent_cycle_polynomial() {
        let (b1, b2) = gen_polys();
        // x^127 + 1 and x^63 + 1 via the long-division oracle
        let mut x127 = vec![0u8; 128];
        x127[0] = 1;
        x127[127] = 1;
        assert!(brute_force_remainder(&x127, b1.generator, 21)
            .iter()
            .all(|&b| b == 0));
        let mut x63 = vec![0u8; 64];
        x63[0] = 1;
        x63[63] = 1;
        assert!(brute_force_remainder(&x63, b2.generator, 12)
            .iter()
            .all(|&b| b == 0));
    }

    #[test]
    fn zero_message_zero_parity() {
        let (b1, _) = gen_polys();
        assert_eq!(b1.parity(&[0u8; 61]).unwrap(), vec![0u8; 21]);
    }

    #[test]
    fn lowest_bit_parity_is_generator_tail() {
        // message = 0..01: m(x)·x^21 = x^21, so the remainder is
        // x^21 + g(x), i.e. the generator without its leading term.
        let (b1, _) = gen_polys();
        let mut msg = [0u8; 61];
        msg[60] = 1;
        let parity = b1.parity(&msg).unwrap();
        let expected: Vec<u8> = (0..21)
            .rev()
            .map(|k| ((b1.generator >> k) & 1) as u8)
            .collect();
        assert_eq!(parity, expected);
    }

    #[test]
    fn parity_matches_brute_force_division() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (code, _) in [(gen_polys().0, ()), (gen_polys().1, ())] {
            for _ in 0..200 {
                let msg = random_message(&mut rng, code.data_len);
                let mut dividend = msg.clone();
                dividend.extend(std::iter::repeat(0).take(code.parity_len));
                let expected =
                    brute_force_remainder(&dividend, code.generator, code.parity_len);
                assert_eq!(code.parity(&msg).unwrap(), expected);
            }
        }
    }

    #[test]
    fn parity_is_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for code in [gen_polys().0, gen_polys().1] {
            for _ in 0..200 {
                let a = random_message(&mut rng, code.data_len);
                let b = random_message(&mut rng, code.data_len);
                let xored: Vec<u8> = a.iter().zip(&b).map(|(x, y)| x ^ y).collect();
                let pa = code.parity(&a).unwrap();
                let pb = code.parity(&b).unwrap();
                let pxor: Vec<u8> = pa.iter().zip(&pb).map(|(x, y)| x ^ y).collect();
                assert_eq!(code.parity(&xored).unwrap(), pxor);
            }
        }
    }

    #[test]
    fn clean_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for code in [gen_polys().0, gen_polys().1] {
            for _ in 0..2000 {
                let cw = codeword_of(code, &random_message(&mut rng, code.data_len));
                let res = code.check_and_correct(&cw).unwrap();
                assert_eq!(res.status, CheckStatus::Clean);
                assert!(res.error_positions.is_empty());
                assert_eq!(res.corrected_codeword, cw);
            }
        }
    }

    #[test]
    fn three_flips_recovered_on_bch1() {
        let (b1, _) = gen_polys();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let clean = codeword_of(b1, &random_message(&mut rng, 61));
        let mut noisy = clean.clone();
        for &p in &[5usize, 40, 77] {
            noisy[p - 1] ^= 1;
        }
        let res = b1.check_and_correct(&noisy).unwrap();
        assert_eq!(res.status, CheckStatus::Corrected);
        assert_eq!(res.error_positions, vec![5, 40, 77]);
        assert_eq!(res.corrected_codeword, clean);
    }

    #[test]
    fn random_errors_within_t_recovered_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for code in [gen_polys().0, gen_polys().1] {
            let n = code.codeword_len();
            for _ in 0..300 {
                let clean = codeword_of(code, &random_message(&mut rng, code.data_len));
                let weight = rng.gen_range(1..=code.t);
                let mut positions = Vec::new();
                while positions.len() < weight {
                    let p = rng.gen_range(1..=n);
                    if !positions.contains(&p) {
                        positions.push(p);
                    }
                }
                positions.sort_unstable();
                let mut noisy = clean.clone();
                for &p in &positions {
                    noisy[p - 1] ^= 1;
                }
                let res = code.check_and_correct(&noisy).unwrap();
                assert_eq!(res.status, CheckStatus::Corrected);
                assert_eq!(res.error_positions, positions);
                assert_eq!(res.corrected_codeword, clean);
            }
        }
    }

    #[test]
    fn single_bit_error_never_clean() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for code in [gen_polys().0, gen_polys().1] {
            let clean = codeword_of(code, &random_message(&mut rng, code.data_len));
            for p in 1..=code.codeword_len() {
                let mut noisy = clean.clone();
                noisy[p - 1] ^= 1;
                let res = code.check_and_correct(&noisy).unwrap();
                assert_ne!(res.status, CheckStatus::Clean);
            }
        }
    }

    #[test]
    fn beyond_t_never_reports_clean() {
        // 3 flips on BCH-2 (t = 2): either uncorrectable or corrected to a
        // different valid codeword — never silently clean.
        let (_, b2) = gen_polys();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..300 {
            let clean = codeword_of(b2, &random_message(&mut rng, 26));
            let mut positions = Vec::new();
            while positions.len() < 3 {
                let p = rng.gen_range(1..=b2.codeword_len());
                if !positions.contains(&p) {
                    positions.push(p);
                }
            }
            let mut noisy = clean.clone();
            for &p in &positions {
                noisy[p - 1] ^= 1;
            }
            let res = b2.check_and_correct(&noisy).unwrap();
            assert_ne!(res.status, CheckStatus::Clean);
            if res.status == CheckStatus::Corrected {
                assert_eq!(b2.syndrome(&res.corrected_codeword).unwrap(), 0);
            }
        }
    }

    #[test]
    fn wrong_lengths_rejected() {
        let (b1, b2) = gen_polys();
        assert!(b1.parity(&[0u8; 60]).is_err());
        assert!(b2.check_and_correct(&[0u8; 37]).is_err());
    }
}
