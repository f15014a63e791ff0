use mqdc_core::complementarity::{ComplementarityReport, SweepRow};

/// `%.12g`-style formatting: 12 significant digits, trailing zeros removed.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let fixed = format!("{:.*}", (11 - exp) as usize, x);
        trim_zeros(&fixed)
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn opt_index(x: Option<usize>) -> String {
    x.map(|i| i.to_string()).unwrap_or_default()
}

fn opt_num(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_default()
}

pub fn sweep_csv(rows: &[SweepRow], with_phi: bool) -> String {
    let mut out = String::new();
    out.push_str(if with_phi {
        "theta,phi,c_adv_max,ggm,delta_c,best_receiver\n"
    } else {
        "theta,c_adv_max,ggm,delta_c,best_receiver\n"
    });
    for r in rows {
        out.push_str(&sig12(r.theta));
        out.push(',');
        if with_phi {
            out.push_str(&opt_num(r.phi));
            out.push(',');
        }
        out.push_str(&format!(
            "{},{},{},{}\n",
            sig12(r.c_adv_max),
            sig12(r.ggm),
            sig12(r.delta_c),
            opt_index(r.best_receiver)
        ));
    }
    out
}

pub fn report_csv(r: &ComplementarityReport) -> String {
    format!(
        "kind,c_adv_max,best_receiver,ggm,er_upper_chain,er_heuristic,er_value,delta_c,slack_t1,slack_t23\n{},{},{},{},{},{},{},{},{},{}\n",
        match r.kind {
            mqdc_core::states::StateKind::Pure => "pure",
            mqdc_core::states::StateKind::Mixed => "mixed",
        },
        sig12(r.advantage.c_adv_max),
        opt_index(r.advantage.best_receiver),
        sig12(r.ggm),
        sig12(r.er_bounds.upper_chain),
        opt_num(r.er_bounds.heuristic_upper),
        sig12(r.er_value),
        opt_num(r.delta_c),
        sig12(r.slack_t1),
        opt_num(r.slack_t23),
    )
}
