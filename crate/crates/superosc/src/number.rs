//! Numbers on the command line: plain decimals or rational multiples of π
//! (`pi`, `2*pi`, `pi/3`, `-3*pi/4`).

use std::f64::consts::PI;

/// Parses one number.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let value = if body.to_ascii_lowercase().contains("pi") {
        parse_pi_multiple(body).ok_or_else(|| format!("cannot parse `{s}` as a multiple of pi"))?
    } else {
        body.parse::<f64>().map_err(|_| format!("cannot parse `{s}` as a number"))?
    };
    if !value.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(if neg { -value } else { value })
}

fn parse_pi_multiple(body: &str) -> Option<f64> {
    let lower = body.to_ascii_lowercase();
    let (num, den) = match lower.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim().parse::<f64>().ok()?)),
        None => (lower.trim(), None),
    };
    let k = match num.split_once('*') {
        Some((k, p)) if p.trim() == "pi" => k.trim().parse::<f64>().ok()?,
        None if num == "pi" => 1.0,
        _ => return None,
    };
    match den {
        Some(d) if d != 0.0 => Some(k * PI / d),
        Some(_) => None,
        None => Some(k * PI),
    }
}

/// Parses a comma-separated list of numbers.
pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(parse_number).collect()
}

/// Parses `lo,hi` with `lo < hi`.
pub fn parse_interval(s: &str) -> Result<(f64, f64), String> {
    match parse_list(s)?.as_slice() {
        [lo, hi] if lo < hi => Ok((*lo, *hi)),
        [_, _] => Err(format!("interval `{s}` must satisfy lo < hi")),
        _ => Err(format!("interval `{s}` must be two numbers `lo,hi`")),
    }
}
