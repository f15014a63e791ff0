//! Angle literals: plain decimals or multiples of pi such as `pi`, `pi/4`,
//! `3pi/4`, `-pi/2`, `0.5pi`, `2*pi/3`.

use std::f64::consts::PI;

pub fn parse_angle(text: &str) -> Result<f64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let lower = s.to_ascii_lowercase();
    let Some(pos) = lower.find("pi") else {
        return lower
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("invalid angle {text:?}"));
    };
    let coeff_text = lower[..pos].trim_end_matches('*');
    let coeff = match coeff_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| format!("invalid angle {text:?}"))?,
    };
    let rest = &lower[pos + 2..];
    let denom = if rest.is_empty() {
        1.0
    } else if let Some(d) = rest.strip_prefix('/') {
        d.parse::<f64>()
            .ok()
            .filter(|&d| d != 0.0 && d.is_finite())
            .ok_or_else(|| format!("invalid angle {text:?}"))?
    } else {
        return Err(format!("invalid angle {text:?}"));
    };
    Ok(coeff * PI / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn literal_tokens_are_exact() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("pi/2").unwrap(), FRAC_PI_2);
        assert_eq!(parse_angle("pi/4").unwrap(), FRAC_PI_4);
        assert_eq!(parse_angle("3pi/4").unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_angle("2*pi").unwrap(), 2.0 * PI);
        assert_eq!(parse_angle("-pi/2").unwrap(), -FRAC_PI_2);
        assert_eq!(parse_angle("0.25").unwrap(), 0.25);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "pie", "pi/0", "xpi", "pi4", "nan", "1/2"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }
}
