//! Human-readable report for a single angle.

use std::fmt::Write;

use twopair_core::{BlochVector, CloneReport, ClonerCoefficients};

use crate::error::CliError;
use crate::format::sig;

const DIGITS: usize = 12;

/// Parses `a,b,c` and checks the unitarity constraint.
pub fn parse_coeffs(text: &str) -> Result<ClonerCoefficients, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!("--coeffs expects `a,b,c`, got `{text}`")));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid coefficient `{p}`")))?;
    }
    Ok(ClonerCoefficients::new(v[0], v[1], v[2])?)
}

fn bloch(m: &BlochVector) -> String {
    format!(
        "({}, {}, {})",
        sig(m.x(), DIGITS),
        sig(m.y(), DIGITS),
        sig(m.z(), DIGITS)
    )
}

pub fn render(r: &CloneReport) -> String {
    let mut s = String::new();
    let c = &r.coeffs;
    let _ = writeln!(s, "phi = {} rad", sig(r.phi(), DIGITS));
    let _ = writeln!(
        s,
        "coefficients ({}): a = {}, b = {}, c = {}",
        if r.optimal { "closed-form optimum" } else { "override" },
        sig(c.a(), DIGITS),
        sig(c.b(), DIGITS),
        sig(c.c(), DIGITS)
    );
    let _ = writeln!(s, "  a^2 + 2b^2 + c^2 - 1 = {:.3e}", c.unitarity_residual());
    let _ = writeln!(s, "  max |V^dagger V - 1| = {:.3e}", r.isometry_defect);

    let _ = writeln!(s, "states:");
    for (i, st) in r.states.iter().enumerate() {
        let _ = writeln!(
            s,
            "  psi{}  input m = {}  copy m = {}  fidelity = {}  |copy1 - copy2| = {:.1e}",
            i + 1,
            bloch(&st.input_bloch),
            bloch(&st.copy_bloch),
            sig(st.fidelity, DIGITS),
            st.copy_mismatch
        );
    }

    let _ = writeln!(s, "fidelity:");
    let _ = writeln!(
        s,
        "  simulated (psi1..psi4) = {}",
        r.states
            .iter()
            .map(|st| sig(st.fidelity, DIGITS))
            .collect::<Vec<_>>()
            .join(", ")
    );
    let _ = writeln!(
        s,
        "  closed form = {}  overlap form = {}  optimum for this phi = {}",
        sig(r.closed_form_fidelity, DIGITS),
        sig(r.general_fidelity, DIGITS),
        sig(r.optimal_fidelity, DIGITS)
    );

    let [sx, sy, sz] = r.simulated_shrinking;
    let _ = writeln!(s, "shrinking factors:   formula          simulated");
    let _ = writeln!(
        s,
        "  eta_x            {:<16} {}",
        sig(r.formula_shrinking.eta_x, DIGITS),
        sig(sx, DIGITS)
    );
    let _ = writeln!(
        s,
        "  eta_z            {:<16} {}",
        sig(r.formula_shrinking.eta_z, DIGITS),
        sig(sz, DIGITS)
    );
    let _ = writeln!(s, "  eta_y            {:<16} {}", "-", sig(sy, DIGITS));

    match (r.lambda, r.residual) {
        (Some(l), Some(res)) => {
            let _ = writeln!(
                s,
                "lagrange: lambda = {}  residuals = [{:.3e}, {:.3e}, {:.3e}, {:.3e}]",
                sig(l, DIGITS),
                res.0[0],
                res.0[1],
                res.0[2],
                res.0[3]
            );
        }
        _ => {
            let _ = writeln!(s, "lagrange: multiplier undefined (a = c = 0), residual check skipped");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bb84_report_lists_all_fidelities() {
        let text = render(&CloneReport::compute(std::f64::consts::FRAC_PI_4, None).unwrap());
        assert!(
            text.contains("simulated (psi1..psi4) = 0.853553390593, 0.853553390593, 0.853553390593, 0.853553390593")
        );
        assert!(text.contains("0.707106781187"));
    }

    #[test]
    fn coefficient_parsing() {
        assert!(parse_coeffs("1,0,0").is_ok());
        assert!(parse_coeffs(" 0.5, 0.5 ,0.5").is_ok());
        assert!(matches!(parse_coeffs("1,0"), Err(CliError::Usage(_))));
        assert!(matches!(parse_coeffs("1,x,0"), Err(CliError::Usage(_))));
        let err = parse_coeffs("1,0.5,0").unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("5e-1"), "{err}");
    }
}
