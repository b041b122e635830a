use super::DomainDescriptor;

const BUNDLED: [(&str, &str); 5] = [
    ("cartpole2d", include_str!("../../descriptors/cartpole2d.json")),
    ("cartpole2d-g", include_str!("../../descriptors/cartpole2d-g.json")),
    ("cartpole3d", include_str!("../../descriptors/cartpole3d.json")),
    ("monopoly", include_str!("../../descriptors/monopoly.json")),
    ("pogo", include_str!("../../descriptors/pogo.json")),
];

pub fn bundled_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(name, _)| *name)
}

/// Parses a bundled descriptor by name (`pogo`, `monopoly`, ...).
pub fn bundled(name: &str) -> Option<DomainDescriptor> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| DomainDescriptor::from_json(text).expect("bundled descriptor is valid"))
}
