//! Number formatting for reports and CSV output.

/// Formats `x` with 17 significant digits in the style of C's `%.17g`,
/// trailing zeros removed. Seventeen digits identify every `f64` uniquely,
/// so parsing the text gives back the same bits.
pub fn sig17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan"
        } else if x > 0.0 {
            "inf"
        } else {
            "-inf"
        }
        .to_owned();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let fixed = format!("{:.*}", (16 - exp) as usize, x);
        trim_fraction(&fixed).to_owned()
    } else {
        format!("{}e{}", trim_fraction(mantissa), exp)
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Comma-joined `sig17` values.
pub fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| sig17(*v))
        .collect::<Vec<_>>()
        .join(",")
}
