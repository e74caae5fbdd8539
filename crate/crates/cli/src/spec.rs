//! Domain files.

use serde::Deserialize;

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum DomainSpec {
    Strip {
        halfwidth: f64,
        spine: Vec<SpineEntry>,
    },
    ConvexPolygon {
        vertices: Vec<[f64; 2]>,
    },
    Pinocchio {
        #[serde(default)]
        theta: Theta,
        #[serde(default)]
        alpha: f64,
        #[serde(default)]
        nose: f64,
    },
    TwoEars {
        #[serde(default)]
        theta: Theta,
    },
    Bowtie {
        #[serde(default)]
        gap: f64,
    },
    TwoBalls {},
}

#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    Line,
    Arc,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpineEntry {
    pub kind: PieceKind,
    pub length: f64,
    pub curvature: Option<f64>,
}

/// `"auto"` or an explicit angle.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub enum Theta {
    #[default]
    Auto,
    Value(f64),
}

impl<'de> Deserialize<'de> for Theta {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(x) => Ok(Theta::Value(x)),
            Raw::Str(s) if s == "auto" => Ok(Theta::Auto),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("theta must be a number or \"auto\", got \"{s}\""))),
        }
    }
}

fn finite(field: &str, x: f64) -> Result<(), String> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(format!("{field}: must be finite"))
    }
}

impl DomainSpec {
    pub fn parse(text: &str) -> Result<Self, String> {
        let spec: DomainSpec = serde_json::from_str(text).map_err(|e| e.to_string())?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            DomainSpec::Strip { .. } => "strip",
            DomainSpec::ConvexPolygon { .. } => "convex_polygon",
            DomainSpec::Pinocchio { .. } => "pinocchio",
            DomainSpec::TwoEars { .. } => "two_ears",
            DomainSpec::Bowtie { .. } => "bowtie",
            DomainSpec::TwoBalls {} => "two_balls",
        }
    }

    /// Field-level checks that the schema cannot express.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            DomainSpec::Strip { halfwidth, spine } => {
                finite("halfwidth", *halfwidth)?;
                if *halfwidth <= 0.0 {
                    return Err("halfwidth: must be positive".into());
                }
                if spine.is_empty() {
                    return Err("spine: needs at least one piece".into());
                }
                for (i, p) in spine.iter().enumerate() {
                    finite(&format!("spine[{i}].length"), p.length)?;
                    if p.length <= 0.0 {
                        return Err(format!("spine[{i}].length: must be positive"));
                    }
                    match (p.kind, p.curvature) {
                        (PieceKind::Arc, None) => return Err(format!("spine[{i}].curvature: required for arcs")),
                        (PieceKind::Line, Some(k)) if k != 0.0 => {
                            return Err(format!("spine[{i}].curvature: lines have zero curvature"))
                        }
                        (_, Some(k)) => {
                            finite(&format!("spine[{i}].curvature"), k)?;
                            if k.abs() * halfwidth >= 1.0 {
                                return Err(format!("spine[{i}].curvature: |κ|·halfwidth = {} is not below 1", k.abs() * halfwidth));
                            }
                        }
                        _ => {}
                    }
                }
            }
            DomainSpec::ConvexPolygon { vertices } => {
                if vertices.len() < 3 {
                    return Err("vertices: need at least 3".into());
                }
                for (i, v) in vertices.iter().enumerate() {
                    finite(&format!("vertices[{i}]"), v[0])?;
                    finite(&format!("vertices[{i}]"), v[1])?;
                }
            }
            DomainSpec::Pinocchio { theta, alpha, nose } => {
                if let Theta::Value(t) = theta {
                    finite("theta", *t)?;
                }
                finite("alpha", *alpha)?;
                finite("nose", *nose)?;
                if *nose < 0.0 {
                    return Err("nose: must be nonnegative".into());
                }
                if *nose > 0.0 && *alpha != 0.0 {
                    return Err("alpha: a nose requires alpha = 0".into());
                }
            }
            DomainSpec::TwoEars { theta } => {
                if let Theta::Value(t) = theta {
                    finite("theta", *t)?;
                }
            }
            DomainSpec::Bowtie { gap } => {
                finite("gap", *gap)?;
                if *gap < 0.0 {
                    return Err("gap: must be nonnegative".into());
                }
            }
            DomainSpec::TwoBalls {} => {}
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        let cases = [
            r#"{"type":"strip","halfwidth":1,"spine":[{"kind":"line","length":20},{"kind":"arc","length":3,"curvature":0.5}]}"#,
            r#"{"type":"convex_polygon","vertices":[[0,0],[1,0],[1,1],[0,1]]}"#,
            r#"{"type":"pinocchio","theta":"auto","alpha":0,"nose":2}"#,
            r#"{"type":"pinocchio","theta":0.53}"#,
            r#"{"type":"two_ears","theta":"auto"}"#,
            r#"{"type":"bowtie","gap":0}"#,
            r#"{"type":"two_balls"}"#,
        ];
        for c in cases {
            DomainSpec::parse(c).unwrap();
        }
    }

    #[test]
    fn rejects_bad_input() {
        for c in [
            r#"{"type":"strip","halfwidth":1,"spine":[{"kind":"arc","length":3,"curvature":1.5}]}"#,
            r#"{"type":"strip","halfwidth":1,"spine":[{"kind":"arc","length":3}]}"#,
            r#"{"type":"strip","halfwidth":1,"spine":[{"kind":"line","length":3,"bend":1}]}"#,
            r#"{"type":"pinocchio","theta":"guess"}"#,
            r#"{"type":"hexagon"}"#,
            r#"{"type":"convex_polygon","vertices":[[0,0],[1,0]]}"#,
            r#"{"type":"bowtie","gap":-1}"#,
            "{",
        ] {
            assert!(DomainSpec::parse(c).is_err(), "{c}");
        }
    }
}
