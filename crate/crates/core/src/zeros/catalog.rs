use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::numerics::{Complex, PrecisionContext, Real};

/// First 100 ordinates, 40 significant digits, shipped with the crate.
pub const BUNDLED_ZEROS_100: &str = include_str!("../../fixtures/zeros100.txt");

/// Digits trusted from the bundled table.
pub const BUNDLED_SOURCE_DIGITS: u32 = 40;

pub const MIN_SOURCE_DIGITS: u32 = 9;

/// Positive imaginary part of a nontrivial zero on the critical line.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroOrdinate {
    gamma: Real,
    literal: String,
    source_digits: u32,
}

impl ZeroOrdinate {
    pub fn new(literal: &str, source_digits: u32) -> Result<Self> {
        if source_digits < MIN_SOURCE_DIGITS {
            return Err(Error::SourceDigits(source_digits));
        }
        let literal = literal.trim();
        if !is_decimal_literal(literal) {
            return Err(Error::InvalidNumber {
                literal: literal.to_string(),
            });
        }
        let gamma = Real::parse_literal(literal)?;
        if !gamma.is_positive() {
            return Err(Error::NonPositive {
                line: 0,
                value: literal.to_string(),
            });
        }
        Ok(Self {
            gamma,
            literal: literal.to_string(),
            source_digits,
        })
    }

    /// The ordinate at literal precision.
    pub fn gamma(&self) -> &Real {
        &self.gamma
    }

    pub fn literal(&self) -> &str {
        &self.literal
    }

    pub fn source_digits(&self) -> u32 {
        self.source_digits
    }
}

/// `rho = 1/2 + i gamma`.
pub fn rho_of(g: &ZeroOrdinate, ctx: &PrecisionContext) -> Complex {
    Complex::new(Real::one(ctx).mul_pow2(-1), g.gamma().round_to(ctx))
}

/// Strictly increasing table of zero ordinates.
#[derive(Debug, Clone)]
pub struct ZeroCatalog {
    ordinates: Vec<ZeroOrdinate>,
    source: String,
}

impl PartialEq for ZeroCatalog {
    fn eq(&self, other: &Self) -> bool {
        self.ordinates == other.ordinates
    }
}

impl ZeroCatalog {
    /// The first 100 zeros shipped with the crate.
    pub fn bundled() -> Self {
        load_catalog(BUNDLED_ZEROS_100.as_bytes(), BUNDLED_SOURCE_DIGITS)
            .expect("bundled table is valid")
            .with_source("bundled:zeros100")
    }

    pub fn from_path(path: &Path, source_digits: u32) -> std::io::Result<Result<Self>> {
        let bytes = std::fs::read(path)?;
        Ok(load_catalog(&bytes, source_digits).map(|c| c.with_source(&path.display().to_string())))
    }

    pub fn with_source(mut self, source: &str) -> Self {
        self.source = source.to_string();
        self
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn ordinates(&self) -> &[ZeroOrdinate] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Last ordinate, `None` for an empty catalog.
    pub fn max_gamma(&self) -> Option<&Real> {
        self.ordinates.last().map(ZeroOrdinate::gamma)
    }

    /// Smallest `source_digits` over the table.
    pub fn source_digits(&self) -> Option<u32> {
        self.ordinates.iter().map(|o| o.source_digits).min()
    }

    /// The first `count` ordinates.
    pub fn truncated(&self, count: usize) -> Self {
        Self {
            ordinates: self.ordinates[..count.min(self.len())].to_vec(),
            source: self.source.clone(),
        }
    }

    /// One literal per line, LF terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.len() * 44);
        for o in &self.ordinates {
            let _ = writeln!(out, "{}", o.literal);
        }
        out
    }
}

/// Parses a zero table: blank lines and `#` comments are skipped, every
/// other line holds one ordinate, in strictly increasing order.
pub fn load_catalog(text: &[u8], source_digits: u32) -> Result<ZeroCatalog> {
    if source_digits < MIN_SOURCE_DIGITS {
        return Err(Error::SourceDigits(source_digits));
    }
    let text = std::str::from_utf8(text)?;
    let mut ordinates: Vec<ZeroOrdinate> = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !is_decimal_literal(line) {
            return Err(Error::Parse {
                line: line_no,
                text: line.to_string(),
            });
        }
        let ord = match ZeroOrdinate::new(line, source_digits) {
            Ok(o) => o,
            Err(Error::NonPositive { value, .. }) => {
                return Err(Error::NonPositive {
                    line: line_no,
                    value,
                })
            }
            Err(_) => {
                return Err(Error::Parse {
                    line: line_no,
                    text: line.to_string(),
                })
            }
        };
        if let Some(prev) = ordinates.last() {
            if ord.gamma <= prev.gamma {
                return Err(Error::NotIncreasing {
                    line: line_no,
                    previous: prev.literal.clone(),
                    value: ord.literal,
                });
            }
        }
        ordinates.push(ord);
    }
    Ok(ZeroCatalog {
        ordinates,
        source: "inline".to_string(),
    })
}

/// `[+-]digits[.digits][(e|E)[+-]digits]`, also `.5` and `5.`.
fn is_decimal_literal(s: &str) -> bool {
    let s = s.strip_prefix(['+', '-']).unwrap_or(s);
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], Some(&s[k + 1..])),
        None => (s, None),
    };
    let mut parts = mantissa.splitn(2, '.');
    let int = parts.next().unwrap_or("");
    let frac = parts.next().unwrap_or("");
    let digits_ok = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if !digits_ok(int) || !digits_ok(frac) || (int.is_empty() && frac.is_empty()) {
        return false;
    }
    match exponent {
        None => true,
        Some(e) => {
            let e = e.strip_prefix(['+', '-']).unwrap_or(e);
            !e.is_empty() && digits_ok(e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn loads_two_lines() {
        let cat = load_catalog(b"14.134725141\n21.022039639", 9).unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat.max_gamma().unwrap().to_sig_string(11), "21.022039639");
    }

    #[test]
    fn empty_file_gives_empty_catalog() {
        let cat = load_catalog(b"", 9).unwrap();
        assert!(cat.is_empty());
        assert!(cat.max_gamma().is_none());
        let cat = load_catalog(b"# nothing\n\n   \n", 9).unwrap();
        assert!(cat.is_empty());
    }

    #[test]
    fn accepts_crlf_comments_and_padding() {
        let cat =
            load_catalog(b"# header\r\n   14.134725142\r\n\r\n21.022039639  \r\n", 9).unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat.ordinates()[0].literal(), "14.134725142");
    }

    #[test]
    fn rejects_out_of_order() {
        let err = load_catalog(b"14.1\n25.0\n21.0\n", 9).unwrap_err();
        assert!(matches!(err, Error::NotIncreasing { line: 3, .. }), "{err}");
        let err = load_catalog(b"14.1\n14.10\n", 9).unwrap_err();
        assert!(matches!(err, Error::NotIncreasing { line: 2, .. }), "{err}");
    }

    #[test]
    fn rejects_garbage_and_nonpositive() {
        let err = load_catalog(b"14.1\nfoo\n", 9).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = load_catalog(b"1.2.3\n", 9).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = load_catalog(b"# c\n-3.5\n", 9).unwrap_err();
        assert!(matches!(err, Error::NonPositive { line: 2, .. }), "{err}");
        let err = load_catalog(b"0\n", 9).unwrap_err();
        assert!(matches!(err, Error::NonPositive { line: 1, .. }), "{err}");
        assert!(matches!(
            load_catalog(b"14.1", 8),
            Err(Error::SourceDigits(8))
        ));
        assert!(matches!(
            load_catalog(&[0xff, 0xfe], 9),
            Err(Error::Encoding(_))
        ));
    }

    #[test]
    fn bundled_table_shape() {
        let cat = ZeroCatalog::bundled();
        assert_eq!(cat.len(), 100);
        assert_eq!(cat.source_digits(), Some(40));
        assert!(cat.ordinates()[0]
            .literal()
            .starts_with("14.1347251417346937904572519835"));
        assert!(cat
            .max_gamma()
            .unwrap()
            .to_sig_string(10)
            .starts_with("236.5242297"));
    }

    #[test]
    fn rho_on_critical_line() {
        let ctx = PrecisionContext::default();
        let g = ZeroOrdinate::new("14.134725141", 9).unwrap();
        let rho = rho_of(&g, &ctx);
        assert_eq!(rho.to_sig_string(12), "0.500000000000+14.1347251410i");
        let one = ZeroOrdinate::new("1", 9).unwrap();
        let rho = rho_of(&one, &ctx);
        assert_eq!(rho, Complex::from_f64(0.5, 1.0, &ctx).unwrap());
        // rho (1 - rho) = 1/4 + gamma^2, exactly real
        let prod = &rho * &rho.one_minus_exact();
        assert!(prod.im.is_zero());
        assert_eq!(prod.re, Real::parse("1.25", &ctx).unwrap());
    }

    #[test]
    fn serialize_round_trip_bundled() {
        let cat = ZeroCatalog::bundled();
        let text = cat.to_text();
        let again = load_catalog(text.as_bytes(), 40).unwrap();
        assert_eq!(again, cat);
        assert_eq!(again.to_text(), text);
    }

    proptest! {
        #[test]
        fn serialize_round_trip(steps in proptest::collection::vec((1u64..10_000_000u64, 0usize..6), 0..40)) {
            let mut acc = 0u64;
            let mut text = String::from("# generated\n");
            for (step, pad) in steps {
                acc += step;
                let lit = format!("{}.{:07}", acc / 10_000_000, acc % 10_000_000);
                text.push_str(&" ".repeat(pad));
                text.push_str(&lit);
                text.push_str(if pad % 2 == 0 { "\n" } else { "\r\n" });
            }
            let cat = load_catalog(text.as_bytes(), 12).unwrap();
            let out = cat.to_text();
            let back = load_catalog(out.as_bytes(), 12).unwrap();
            prop_assert_eq!(&back, &cat);
            prop_assert_eq!(back.to_text(), out);
        }
    }
}
