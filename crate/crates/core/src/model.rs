//! System parameters, validation of the rate hierarchy, and conversion
//! between dimensionless (`ω_m = 1`) and SI unit systems.
//!
//! Dimensionless convention: every rate is quoted in units of the mechanical
//! frequency `ω_m`, the drive amplitude `α_in` in `√ω_m`, and the gravity
//! strength `μm` (always the product of the deformation parameter and the
//! effective mass) in `ω_m⁻¹`.

use thiserror::Error;

/// Resonator/cavity layout of the coupled system.
///
/// `Binary`: two resonators, each with its own driven cavity.
/// `Ternary`: three chain-coupled resonators; cavities drive the two outer
/// ones (resonators 1 and 3), the middle one is bare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Binary,
    Ternary,
}

impl Topology {
    pub fn n_resonators(self) -> usize {
        match self {
            Topology::Binary => 2,
            Topology::Ternary => 3,
        }
    }

    pub fn n_cavities(self) -> usize {
        2
    }

    /// Index of the mechanical resonator the given cavity couples to.
    pub fn cavity_resonator(self, cavity: usize) -> usize {
        match self {
            Topology::Binary => cavity,
            // cavities sit on the ends of the chain
            Topology::Ternary => cavity * 2,
        }
    }
}

/// All physical rates and couplings of the coupled optomechanical system,
/// in units of `ω_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemParams {
    pub topology: Topology,
    /// Mechanical frequencies, one per resonator `[ω_m]`.
    pub omega: Vec<f64>,
    /// Intrinsic mechanical damping `γ_m` `[ω_m]`.
    pub gamma_m: f64,
    /// Cavity damping `κ` `[ω_m]`.
    pub kappa: f64,
    /// Optomechanical coupling `g` `[ω_m]`.
    pub g: f64,
    /// Mechanical coupling `J` between chain neighbours `[ω_m]`.
    pub coupling: f64,
    /// Drive detunings `Δ_j`, one per cavity `[ω_m]`.
    pub detuning: Vec<f64>,
    /// Drive field amplitude `α_in` `[√ω_m]`.
    pub drive: f64,
    /// Gravity strength: the product `μm` `[ω_m⁻¹]`.
    pub mu_m: f64,
    /// Oscillation phase of the limit-cycle ansatz; fixed to 0.
    pub theta: f64,
}

impl SystemParams {
    /// Paper-regime template: identical unit-frequency resonators, red/blue
    /// detuned cavities at `Δ = ∓ω_m`. Drive and gravity strength start at 0.
    pub fn symmetric(topology: Topology, gamma_m: f64, kappa: f64, g: f64, coupling: f64) -> Self {
        SystemParams {
            topology,
            omega: vec![1.0; topology.n_resonators()],
            gamma_m,
            kappa,
            g,
            coupling,
            detuning: vec![-1.0, 1.0],
            drive: 0.0,
            mu_m: 0.0,
            theta: 0.0,
        }
    }

    pub fn with_drive(mut self, drive: f64) -> Self {
        self.drive = drive;
        self
    }

    pub fn with_mu_m(mut self, mu_m: f64) -> Self {
        self.mu_m = mu_m;
        self
    }
}

/// Soft violation of the rate hierarchy: the inequality holds but the ratio
/// exceeds the separation threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct HierarchyWarning {
    /// e.g. "kappa/omega_min = 0.33 exceeds 0.2"
    pub message: String,
    pub ratio: f64,
}

#[derive(Debug, Error)]
pub enum ModelError {
    /// A rate that must be strictly positive is zero or negative.
    #[error("non-positive rate: {name} = {value}")]
    NonPositiveRate { name: &'static str, value: f64 },
    /// A hierarchy inequality fails outright (ratio ≥ 1).
    #[error("hierarchy violation: {inequality} (ratio {ratio})")]
    HierarchyViolation { inequality: String, ratio: f64 },
    /// Topology and per-resonator/cavity field lengths disagree.
    #[error("field length mismatch: {name} has {got} entries, expected {expected}")]
    FieldLength {
        name: &'static str,
        got: usize,
        expected: usize,
    },
    /// An SI field required for the conversion was not supplied.
    #[error("missing field: {0}")]
    MissingField(&'static str),
    #[error("non-finite value in field {0}")]
    NonFinite(&'static str),
}

/// Parameters that passed [`validate`]; warnings record soft hierarchy
/// violations. Immutable by construction.
#[derive(Debug, Clone)]
pub struct ValidatedParams {
    params: SystemParams,
    warnings: Vec<HierarchyWarning>,
}

impl ValidatedParams {
    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn warnings(&self) -> &[HierarchyWarning] {
        &self.warnings
    }
}

impl std::ops::Deref for ValidatedParams {
    type Target = SystemParams;
    fn deref(&self) -> &SystemParams {
        &self.params
    }
}

/// Ratio above which two scales are no longer considered well separated.
/// The hierarchy itself (ratio < 1) is a hard requirement; the threshold
/// only triggers warnings.
pub const DEFAULT_HIERARCHY_RATIO: f64 = 0.2;

/// Check positivity and the rate hierarchy `γ_m, g ≪ κ ≪ ω_j`.
///
/// Ratios in `[threshold, 1)` produce warnings; ratios `≥ 1` are hard
/// errors, as are non-positive rates. `delta` and `mu_m` may take any sign
/// and `mu_m ≥ 0` respectively.
pub fn validate(params: &SystemParams) -> Result<ValidatedParams, ModelError> {
    validate_with_threshold(params, DEFAULT_HIERARCHY_RATIO)
}

pub fn validate_with_threshold(
    params: &SystemParams,
    threshold: f64,
) -> Result<ValidatedParams, ModelError> {
    let n_res = params.topology.n_resonators();
    let n_cav = params.topology.n_cavities();
    if params.omega.len() != n_res {
        return Err(ModelError::FieldLength {
            name: "omega",
            got: params.omega.len(),
            expected: n_res,
        });
    }
    if params.detuning.len() != n_cav {
        return Err(ModelError::FieldLength {
            name: "detuning",
            got: params.detuning.len(),
            expected: n_cav,
        });
    }

    let positive: [(&'static str, f64); 4] = [
        ("gamma_m", params.gamma_m),
        ("kappa", params.kappa),
        ("g", params.g),
        ("coupling", params.coupling),
    ];
    for (name, value) in positive {
        if !value.is_finite() {
            return Err(ModelError::NonFinite(name));
        }
        if value <= 0.0 {
            return Err(ModelError::NonPositiveRate { name, value });
        }
    }
    for (i, &w) in params.omega.iter().enumerate() {
        if !w.is_finite() {
            return Err(ModelError::NonFinite("omega"));
        }
        if w <= 0.0 {
            return Err(ModelError::NonPositiveRate {
                name: match i {
                    0 => "omega[0]",
                    1 => "omega[1]",
                    _ => "omega[2]",
                },
                value: w,
            });
        }
    }
    if params.mu_m < 0.0 || !params.mu_m.is_finite() {
        return Err(ModelError::NonPositiveRate {
            name: "mu_m",
            value: params.mu_m,
        });
    }
    for (name, value) in [("drive", params.drive), ("theta", params.theta)] {
        if !value.is_finite() {
            return Err(ModelError::NonFinite(name));
        }
    }
    if params.drive < 0.0 {
        return Err(ModelError::NonPositiveRate {
            name: "drive",
            value: params.drive,
        });
    }
    for &d in &params.detuning {
        if !d.is_finite() {
            return Err(ModelError::NonFinite("detuning"));
        }
    }

    let omega_min = params.omega.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut warnings = Vec::new();
    let mut check = |small: f64, large: f64, label: &str| -> Result<(), ModelError> {
        let ratio = small / large;
        if ratio >= 1.0 {
            return Err(ModelError::HierarchyViolation {
                inequality: label.to_string(),
                ratio,
            });
        }
        if ratio > threshold {
            warnings.push(HierarchyWarning {
                message: format!("{label}: ratio {ratio:.3} exceeds {threshold}"),
                ratio,
            });
        }
        Ok(())
    };
    check(params.gamma_m, params.kappa, "gamma_m << kappa")?;
    check(params.g, params.kappa, "g << kappa")?;
    check(params.kappa, omega_min, "kappa << omega")?;

    Ok(ValidatedParams {
        params: params.clone(),
        warnings,
    })
}

/// The coupled-beam system in laboratory units, as used for the
/// experimental-feasibility estimates. Angular rates in rad/s.
#[derive(Debug, Clone, PartialEq)]
pub struct SiParams {
    /// Mechanical frequency `ω_m` (rad/s).
    pub omega_m: f64,
    /// Mechanical damping `γ_m` (rad/s).
    pub gamma_m: f64,
    /// Cavity damping `κ` (rad/s).
    pub kappa: f64,
    /// Optomechanical coupling `g` (rad/s).
    pub g: f64,
    /// Mechanical coupling `J` (rad/s).
    pub coupling: f64,
    /// Effective resonator mass (kg).
    pub mass: f64,
    /// Effective temperature (K).
    pub temperature: f64,
    /// Beam thickness (m).
    pub thickness: f64,
    /// Mechanical quality factor.
    pub quality: f64,
    /// Measurement bandwidth `Δf` (Hz).
    pub bandwidth: f64,
    /// Detunings (rad/s), per cavity; required for the dimensionless
    /// conversion, not part of the published table.
    pub detuning: Option<Vec<f64>>,
    /// Drive amplitude in `√(rad/s)`; required for the conversion.
    pub drive: Option<f64>,
    /// Gravity strength `μm` in `(rad/s)⁻¹`; required for the conversion.
    pub mu_m: Option<f64>,
}

impl SiParams {
    /// Consistency warning between `quality` and `omega_m / gamma_m`.
    /// A mismatch beyond 10× is flagged but never rejected.
    pub fn quality_consistency_warning(&self) -> Option<HierarchyWarning> {
        let implied = self.omega_m / self.gamma_m;
        let ratio = if implied > self.quality {
            implied / self.quality
        } else {
            self.quality / implied
        };
        (ratio > 10.0).then(|| HierarchyWarning {
            message: format!(
                "quality {} vs omega_m/gamma_m = {implied:.3e} disagree by {ratio:.1}x",
                self.quality
            ),
            ratio,
        })
    }

    fn check_positive(&self) -> Result<(), ModelError> {
        let fields: [(&'static str, f64); 10] = [
            ("omega_m", self.omega_m),
            ("gamma_m", self.gamma_m),
            ("kappa", self.kappa),
            ("g", self.g),
            ("coupling", self.coupling),
            ("mass", self.mass),
            ("temperature", self.temperature),
            ("thickness", self.thickness),
            ("quality", self.quality),
            ("bandwidth", self.bandwidth),
        ];
        for (name, value) in fields {
            if !value.is_finite() {
                return Err(ModelError::NonFinite(name));
            }
            // bandwidth may legitimately be zero (ideal narrow-band readout)
            if value < 0.0 || (value == 0.0 && name != "bandwidth") {
                return Err(ModelError::NonPositiveRate { name, value });
            }
        }
        Ok(())
    }

    /// Convert to the internal `ω_m = 1` system: every rate is divided by
    /// `omega_m`, the drive by `√omega_m`, and `mu_m` is multiplied by it.
    ///
    /// `detuning`, `drive` and `mu_m` must be supplied (the SI table omits
    /// them), otherwise [`ModelError::MissingField`] is returned.
    pub fn to_dimensionless(&self, topology: Topology) -> Result<SystemParams, ModelError> {
        self.check_positive()?;
        let detuning = self
            .detuning
            .as_ref()
            .ok_or(ModelError::MissingField("detuning"))?;
        let drive = self.drive.ok_or(ModelError::MissingField("drive"))?;
        let mu_m = self.mu_m.ok_or(ModelError::MissingField("mu_m"))?;
        let w = self.omega_m;
        Ok(SystemParams {
            topology,
            omega: vec![1.0; topology.n_resonators()],
            gamma_m: self.gamma_m / w,
            kappa: self.kappa / w,
            g: self.g / w,
            coupling: self.coupling / w,
            detuning: detuning.iter().map(|d| d / w).collect(),
            drive: drive / w.sqrt(),
            mu_m: mu_m * w,
            theta: 0.0,
        })
    }
}

/// Mechanical/thermal quantities that have no dimensionless counterpart and
/// must be re-attached when mapping back to SI units.
#[derive(Debug, Clone, Copy)]
pub struct SiAnchor {
    pub omega_m: f64,
    pub mass: f64,
    pub temperature: f64,
    pub thickness: f64,
    pub quality: f64,
    pub bandwidth: f64,
}

/// Inverse of [`SiParams::to_dimensionless`]: rescale every dimensionless
/// rate by `anchor.omega_m`. Round-trips with the forward conversion to
/// better than 1e-12 relative on all fields.
pub fn from_dimensionless(params: &SystemParams, anchor: &SiAnchor) -> SiParams {
    let w = anchor.omega_m;
    SiParams {
        omega_m: w,
        gamma_m: params.gamma_m * w,
        kappa: params.kappa * w,
        g: params.g * w,
        coupling: params.coupling * w,
        mass: anchor.mass,
        temperature: anchor.temperature,
        thickness: anchor.thickness,
        quality: anchor.quality,
        bandwidth: anchor.bandwidth,
        detuning: Some(params.detuning.iter().map(|d| d * w).collect()),
        drive: Some(params.drive * w.sqrt()),
        mu_m: Some(params.mu_m / w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn paper_binary() -> SystemParams {
        SystemParams::symmetric(Topology::Binary, 1e-3, 0.1, 2.5e-4, 2.2e-2)
    }

    #[test]
    fn paper_regime_is_valid() {
        let v = validate(&paper_binary()).unwrap();
        assert!(v.warnings().is_empty());
        assert_eq!(v.params().topology, Topology::Binary);
    }

    #[test]
    fn kappa_above_omega_is_rejected() {
        let mut p = paper_binary();
        p.kappa = 1.5;
        match validate(&p) {
            Err(ModelError::HierarchyViolation { inequality, .. }) => {
                assert!(inequality.contains("kappa << omega"), "{inequality}");
            }
            other => panic!("expected hierarchy violation, got {other:?}"),
        }
    }

    #[test]
    fn zero_damping_is_rejected() {
        let mut p = paper_binary();
        p.gamma_m = 0.0;
        assert!(matches!(
            validate(&p),
            Err(ModelError::NonPositiveRate { name: "gamma_m", .. })
        ));
    }

    #[test]
    fn soft_violation_warns_but_passes() {
        let mut p = paper_binary();
        p.kappa = 1.0 / 3.0; // between threshold and 1
        let v = validate(&p).unwrap();
        assert_eq!(v.warnings().len(), 1);
        assert!(v.warnings()[0].message.contains("kappa << omega"));
    }

    #[test]
    fn validate_is_idempotent() {
        let p = paper_binary();
        let v1 = validate(&p).unwrap();
        let v2 = validate(v1.params()).unwrap();
        assert_eq!(v1.params(), v2.params());
        assert_eq!(v1.warnings().len(), v2.warnings().len());
    }

    #[test]
    fn wrong_field_lengths_are_rejected() {
        let mut p = paper_binary();
        p.omega = vec![1.0; 3];
        assert!(matches!(
            validate(&p),
            Err(ModelError::FieldLength { name: "omega", .. })
        ));
    }

    fn si_beams() -> SiParams {
        let two_pi = std::f64::consts::TAU;
        SiParams {
            omega_m: two_pi * 6e9,
            gamma_m: two_pi * 3e6,
            kappa: two_pi * 2e9,
            g: two_pi * 0.8e6,
            coupling: two_pi * 10e6,
            mass: 5.3e-15,
            temperature: 300.0,
            thickness: 80e-9,
            quality: 1e12,
            bandwidth: 1e-10,
            detuning: Some(vec![-two_pi * 6e9, two_pi * 6e9]),
            drive: Some(100.0 * (two_pi * 6e9).sqrt()),
            mu_m: Some(2e-21 / (two_pi * 6e9)),
        }
    }

    #[test]
    fn si_conversion_matches_quoted_ratios() {
        let sys = si_beams().to_dimensionless(Topology::Binary).unwrap();
        assert_relative_eq!(sys.gamma_m, 5e-4, max_relative = 1e-12);
        assert_relative_eq!(sys.kappa, 1.0 / 3.0, max_relative = 1e-12);
        assert_relative_eq!(sys.coupling, 10.0 / 6000.0, max_relative = 1e-12);
        assert_relative_eq!(sys.drive, 100.0, max_relative = 1e-12);
    }

    #[test]
    fn unit_omega_conversion_is_identity() {
        let si = SiParams {
            omega_m: 1.0,
            gamma_m: 1.0 - 1e-9, // strictly below omega_m so the hierarchy holds downstream
            kappa: 0.5,
            g: 0.25,
            coupling: 0.125,
            mass: 1.0,
            temperature: 1.0,
            thickness: 1.0,
            quality: 1.0,
            bandwidth: 1.0,
            detuning: Some(vec![-1.0, 1.0]),
            drive: Some(2.0),
            mu_m: Some(3.0),
        };
        let sys = si.to_dimensionless(Topology::Binary).unwrap();
        assert_relative_eq!(sys.gamma_m, 1.0 - 1e-9, max_relative = 1e-15);
        assert_relative_eq!(sys.mu_m, 3.0, max_relative = 1e-15);
    }

    #[test]
    fn missing_drive_is_reported() {
        let mut si = si_beams();
        si.drive = None;
        assert!(matches!(
            si.to_dimensionless(Topology::Binary),
            Err(ModelError::MissingField("drive"))
        ));
    }

    #[test]
    fn round_trip_si_identity() {
        let si = si_beams();
        let sys = si.to_dimensionless(Topology::Binary).unwrap();
        let anchor = SiAnchor {
            omega_m: si.omega_m,
            mass: si.mass,
            temperature: si.temperature,
            thickness: si.thickness,
            quality: si.quality,
            bandwidth: si.bandwidth,
        };
        let back = from_dimensionless(&sys, &anchor);
        assert_relative_eq!(back.gamma_m, si.gamma_m, max_relative = 1e-12);
        assert_relative_eq!(back.kappa, si.kappa, max_relative = 1e-12);
        assert_relative_eq!(back.g, si.g, max_relative = 1e-12);
        assert_relative_eq!(back.coupling, si.coupling, max_relative = 1e-12);
        assert_relative_eq!(
            back.drive.unwrap(),
            si.drive.unwrap(),
            max_relative = 1e-12
        );
        assert_relative_eq!(back.mu_m.unwrap(), si.mu_m.unwrap(), max_relative = 1e-12);
        for (a, b) in back
            .detuning
            .as_ref()
            .unwrap()
            .iter()
            .zip(si.detuning.as_ref().unwrap())
        {
            assert_relative_eq!(a, b, max_relative = 1e-12);
        }
    }

    #[test]
    fn quality_mismatch_warns() {
        let mut si = si_beams();
        // omega_m/gamma_m = 2000, quoted quality 1e12 -> mismatch flagged
        let w = si.quality_consistency_warning();
        assert!(w.is_some());
        si.quality = si.omega_m / si.gamma_m;
        assert!(si.quality_consistency_warning().is_none());
    }
}
