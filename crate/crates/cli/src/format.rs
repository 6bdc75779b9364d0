//! Numeric output formatting: fixed 17 significant digits, locale-free,
//! positional where readable and scientific otherwise (printf %.17g style,
//! with trailing zeros trimmed).

/// Format with 17 significant digits.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let neg = x < 0.0;
    let s = format!("{:.16e}", x.abs());
    let (mant, exp) = s.split_once('e').expect("exponential format");
    let exp: i32 = exp.parse().expect("exponent");
    let digits: String = mant.chars().filter(|c| *c != '.').collect();
    debug_assert_eq!(digits.len(), 17);

    let body = if (-4..17).contains(&exp) {
        if exp >= 0 {
            let cut = (exp + 1) as usize;
            let int = &digits[..cut];
            let frac = digits[cut..].trim_end_matches('0');
            if frac.is_empty() {
                int.to_string()
            } else {
                format!("{int}.{frac}")
            }
        } else {
            let frac = digits.trim_end_matches('0');
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), frac)
        }
    } else {
        let trimmed = digits.trim_end_matches('0');
        let (head, tail) = trimmed.split_at(1);
        if tail.is_empty() {
            format!("{head}e{exp}")
        } else {
            format!("{head}.{tail}e{exp}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_print_bare() {
        assert_eq!(g17(1.0), "1");
        assert_eq!(g17(-3.0), "-3");
        assert_eq!(g17(0.0), "0");
        assert_eq!(g17(-0.0), "0");
        assert_eq!(g17(24.0), "24");
    }

    #[test]
    fn positional_range() {
        assert_eq!(g17(0.5), "0.5");
        // 17 digits of the exact binary value (not the shortest form).
        assert_eq!(g17(std::f64::consts::LN_2), "0.69314718055994529");
        assert_eq!(g17(0.0001), "0.0001");
        assert_eq!(g17(1234.5), "1234.5");
    }

    #[test]
    fn scientific_range() {
        assert_eq!(g17((-20.0f64).exp()), "2.0611536224385579e-9");
        assert_eq!(g17(1e17), "1e17");
        assert_eq!(g17(-2.5e-7), "-2.4999999999999999e-7");
        assert_eq!(g17(1e-5), "1.0000000000000001e-5");
        assert_eq!(g17(9.5e-5), "9.5000000000000005e-5");
    }

    #[test]
    fn non_finite() {
        assert_eq!(g17(f64::INFINITY), "inf");
        assert_eq!(g17(f64::NEG_INFINITY), "-inf");
        assert_eq!(g17(f64::NAN), "nan");
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for &x in &[
            std::f64::consts::PI,
            1.0 / 3.0,
            6.02214076e23,
            5e-324,
            f64::MAX,
        ] {
            let printed = g17(x);
            let back: f64 = printed.parse().unwrap();
            assert_eq!(back, x, "{printed}");
        }
    }
}
