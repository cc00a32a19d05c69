use std::fmt;

use num_complex::Complex64;

use super::{SubsetIndex, ZeonElement};

/// Formats `x` with `digits` significant figures, trimming trailing zeros:
/// `0.363636`, `3.23607`, `5`, `1.5e-7`.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -5 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        format!("{m}e{exp}")
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn blade_name(i: SubsetIndex) -> String {
    let gens: Vec<String> = i.generators().map(|g| g.to_string()).collect();
    format!("z[{}]", gens.join(","))
}

impl ZeonElement {
    /// Renders the element as `5 - 4*z[1,2,3]` with coefficients printed to
    /// `digits` significant figures. Components whose printed value is zero
    /// are dropped, as is a real or imaginary part below `1e-12` of the
    /// coefficient's modulus.
    pub fn to_pretty(&self, digits: usize) -> String {
        let mut out = String::new();
        for (i, c) in self.terms() {
            let c = display_clean(c);
            let re = format_significant(c.re, digits);
            let im = format_significant(c.im, digits);
            let re_zero = is_zero_str(&re);
            let im_zero = is_zero_str(&im);
            if re_zero && im_zero {
                continue;
            }
            let (negative, magnitude) = if im_zero {
                (c.re < 0.0, format_significant(c.re.abs(), digits))
            } else if re_zero {
                let m = format_significant(c.im.abs(), digits);
                (
                    c.im < 0.0,
                    if m == "1" {
                        "i".to_string()
                    } else {
                        format!("{m}i")
                    },
                )
            } else {
                (false, format!("({})", complex_str(c, digits)))
            };
            let body = if i.is_empty() {
                magnitude
            } else if magnitude == "1" {
                blade_name(i)
            } else {
                format!("{magnitude}*{}", blade_name(i))
            };
            match (out.is_empty(), negative) {
                (true, false) => out.push_str(&body),
                (true, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn display_clean(c: Complex64) -> Complex64 {
    let floor = 1e-12 * c.norm();
    let part = |x: f64| if x.abs() <= floor { 0.0 } else { x };
    Complex64::new(part(c.re), part(c.im))
}

fn is_zero_str(s: &str) -> bool {
    s == "0" || s == "-0"
}

fn complex_str(c: Complex64, digits: usize) -> String {
    let re = format_significant(c.re, digits);
    let im = format_significant(c.im.abs(), digits);
    let sign = if c.im < 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

impl fmt::Display for ZeonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty(f.precision().unwrap_or(6)))
    }
}
