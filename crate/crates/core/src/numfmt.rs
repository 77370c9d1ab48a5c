//! Decimal formatting with 17 significant digits (C's `%.17g`), which
//! round-trips every finite `f64` through `str::parse`.

pub fn g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();

    if !(-5..17).contains(&exp) {
        let mut m = format!("{}.{}", &digits[..1], &digits[1..]);
        trim_fraction(&mut m);
        return format!("{sign}{m}e{exp}");
    }
    let mut out = String::with_capacity(24);
    out.push_str(sign);
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        let point = exp as usize + 1;
        out.push_str(&digits[..point]);
        out.push('.');
        out.push_str(&digits[point..]);
    }
    trim_fraction(&mut out);
    out
}

fn trim_fraction(s: &mut String) {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn matches_printf_style() {
        assert_eq!(g17(3.022), "3.0219999999999998");
        assert_eq!(g17(0.5), "0.5");
        assert_eq!(g17(1.0), "1");
        assert_eq!(g17(-2.25), "-2.25");
        assert_eq!(g17(1e-7), "9.9999999999999995e-8");
        assert_eq!(g17(123456.0), "123456");
        assert_eq!(g17(1e20), "1e20");
        assert_eq!(g17(0.0001), "0.0001");
    }

    proptest! {
        #[test]
        fn round_trips(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
            let s = g17(x);
            prop_assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }
}
