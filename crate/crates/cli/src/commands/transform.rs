//! `synchrony transform` — relabel events between synchronization
//! conventions, either from inline flags or from a scenario file's
//! `kinematics` section.

use std::path::PathBuf;

use synchrony_core::kinematics::{resynchronize, transform_velocity, Event4, SyncParam};

use super::require_flag;
use crate::fmt::{json_str, sig17};
use crate::scenario::ScenarioFile;
use crate::CliError;

#[derive(clap::Args)]
pub struct TransformArgs {
    /// Scenario file; transforms every event in its `kinematics` section
    /// from the `from` convention to the `to` convention.
    #[arg(value_name = "SCENARIO", conflicts_with_all = ["t", "x", "from_alpha", "to_alpha"])]
    pub scenario: Option<PathBuf>,

    /// Event time coordinate (inline mode).
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<f64>,
    /// Event x coordinate (inline mode).
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    /// Event y coordinate.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub y: f64,
    /// Event z coordinate.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub z: f64,
    /// Source tilt: one number (along x̂) or `ax,ay,az`.
    #[arg(long, value_parser = super::parse_alpha, allow_hyphen_values = true)]
    pub from_alpha: Option<[f64; 3]>,
    /// Target tilt: one number (along x̂) or `ax,ay,az`.
    #[arg(long, value_parser = super::parse_alpha, allow_hyphen_values = true)]
    pub to_alpha: Option<[f64; 3]>,
}

fn event_json(e: &Event4) -> String {
    format!(
        "{{\"t\":{},\"x\":{},\"y\":{},\"z\":{},\"convention\":{}}}",
        sig17(e.t),
        sig17(e.x),
        sig17(e.y),
        sig17(e.z),
        json_str(&e.convention)
    )
}

pub fn run(args: &TransformArgs) -> Result<bool, CliError> {
    if let Some(path) = &args.scenario {
        let (scen, _bytes) = ScenarioFile::load(path)?;
        let kin = scen
            .kinematics
            .as_ref()
            .ok_or_else(|| CliError::Input("scenario has no `kinematics` section".into()))?;
        let from_label = kin
            .from
            .clone()
            .ok_or_else(|| CliError::Input("missing field `kinematics.from`".into()))?;
        let to_label = kin
            .to
            .clone()
            .ok_or_else(|| CliError::Input("missing field `kinematics.to`".into()))?;
        let from = scen.sync_param(&from_label)?;
        let to = scen.sync_param(&to_label)?;
        if kin.events.is_empty() {
            return Err(CliError::Input("`kinematics.events` is empty".into()));
        }
        let events: Vec<String> = kin
            .events
            .iter()
            .map(|e| {
                let event = Event4::new(e.t, e.x, e.y, e.z, &from.label);
                event_json(&resynchronize(&event, &from, &to))
            })
            .collect();
        // Velocities compose through the base convention; lengths are
        // untouched because the relabeling leaves spatial coordinates alone.
        let velocities: Vec<String> = kin
            .velocities
            .iter()
            .map(|&v| {
                transform_velocity(v, &from, &to)
                    .map(sig17)
                    .map_err(|e| CliError::Degenerate(format!("velocity {v}: {e}")))
            })
            .collect::<Result<_, _>>()?;
        let lengths: Vec<String> = kin.lengths.iter().copied().map(sig17).collect();
        println!(
            "{{\"from\":{},\"to\":{},\"events\":[{}],\"velocities\":[{}],\"lengths\":[{}]}}",
            json_str(&from.label),
            json_str(&to.label),
            events.join(","),
            velocities.join(","),
            lengths.join(",")
        );
    } else {
        let t = require_flag("--t", args.t)?;
        let x = require_flag("--x", args.x)?;
        let from = SyncParam::new(require_flag("--from-alpha", args.from_alpha)?, "source");
        let to = SyncParam::new(require_flag("--to-alpha", args.to_alpha)?, "target");
        let event = Event4::new(t, x, args.y, args.z, "source");
        println!("{}", event_json(&resynchronize(&event, &from, &to)));
    }
    Ok(true)
}
