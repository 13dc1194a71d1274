//! Angle literals: plain radians (`0.3`) or fractions of pi (`pi`, `pi/4`,
//! `3pi/8`, `3*pi/8`).

use std::f64::consts::PI;

pub fn parse_angle(text: &str) -> Result<f64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let lower = s.to_ascii_lowercase();
    let value = match lower.find("pi") {
        None => lower.parse::<f64>().map_err(|_| format!("invalid angle `{text}`"))?,
        Some(pos) => {
            let head = lower[..pos].trim_end_matches('*');
            let tail = &lower[pos + 2..];
            let numerator = match head {
                "" => 1.0,
                "-" => -1.0,
                h => h
                    .parse::<f64>()
                    .map_err(|_| format!("invalid multiplier in `{text}`"))?,
            };
            let denominator = match tail {
                "" => 1.0,
                t => t
                    .strip_prefix('/')
                    .and_then(|d| d.parse::<f64>().ok())
                    .filter(|d| *d != 0.0)
                    .ok_or_else(|| format!("invalid divisor in `{text}`"))?,
            };
            numerator * PI / denominator
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("angle `{text}` is not finite"))
    }
}
