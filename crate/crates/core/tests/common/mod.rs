#![allow(dead_code)]

use cyclotrig::{parse_identity, Identity};

/// Identities known to hold; a regression corpus for the property tests.
pub const KNOWN: [&str; 15] = [
    "tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)",
    "tan(pi/11) + 4 sin(3pi/11) = sqrt(11)",
    "tan(4pi/11) + 4 sin(pi/11) = sqrt(11)",
    "tan(5pi/11) - 4 sin(4pi/11) = sqrt(11)",
    "tan(2pi/11) - 4 sin(5pi/11) = -sqrt(11)",
    "tan(pi/9) + 4 sin(pi/9) = sqrt(3)",
    "tan(2pi/9) - 4 sin(2pi/9) = -sqrt(3)",
    "tan(4pi/9) - 4 sin(4pi/9) = sqrt(3)",
    "tan(6pi/9) + 4 sin(6pi/9) = sqrt(3)",
    "tan(pi/7) - 4 sin(2pi/7) = -sqrt(7)",
    "tan(2pi/7) - 4 sin(3pi/7) = -sqrt(7)",
    "tan(3pi/7) - 4 sin(pi/7) = sqrt(7)",
    "tan(2pi/7) + 4 sin(2pi/7) - 4 sin(pi/7) = sqrt(7)",
    "tan(4pi/19) + 4 sin(5pi/19) - 4 sin(6pi/19) + 4 sin(9pi/19) = sqrt(19)",
    "tan(pi/9) + 2 sin(pi/9) - 2 sin(2pi/9) + 2 sin(4pi/9) = sqrt(3)",
];

pub fn id(text: &str) -> Identity {
    parse_identity(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}
