//! Text rendering helpers shared by every command.
//!
//! All floating-point output goes through [`sig17`] so that printed values
//! parse back to the identical bit pattern, which is what makes report
//! round-trips and byte-level determinism checks meaningful.

/// Render with 17 significant digits (`{:.16e}`), enough to round-trip any
/// f64 through text exactly.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Escape a string for embedding in a JSON document.
pub fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Render a 3-vector as a JSON array of 17-digit numbers.
pub fn json_vec3(v: [f64; 3]) -> String {
    format!("[{},{},{}]", sig17(v[0]), sig17(v[1]), sig17(v[2]))
}
