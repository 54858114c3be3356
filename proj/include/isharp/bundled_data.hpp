#pragma once

// Bundled dataset, one record per line.

namespace isharp {

inline constexpr const char* kBundledData = R"ISHARP({"schema_version":1,"table":"CITE","key":"Eq. (2.1)","payload":{"topic":"Euler characteristic of framed instanton homology"},"citation":"Eq. (2.1)"}
{"schema_version":1,"table":"CITE","key":"Theorem 2.1","payload":{"topic":"surgery exact triangle"},"citation":"Theorem 2.1"}
{"schema_version":1,"table":"CITE","key":"Proposition 2.4","payload":{"topic":"collapse of the odd Khovanov spectral sequence"},"citation":"Proposition 2.4"}
{"schema_version":1,"table":"CITE","key":"Definition 3.6","payload":{"topic":"the invariant nu"},"citation":"Definition 3.6"}
{"schema_version":1,"table":"CITE","key":"Definition 3.7","payload":{"topic":"V/W shape and r0"},"citation":"Definition 3.7"}
{"schema_version":1,"table":"CITE","key":"Theorem 3.8","payload":{"topic":"integer surgery formula and concordance invariance"},"citation":"Theorem 3.8"}
{"schema_version":1,"table":"CITE","key":"Proposition 3.9","payload":{"topic":"nu and r0 of instanton L-space knots"},"citation":"Proposition 3.9"}
{"schema_version":1,"table":"CITE","key":"Theorem 1.9","payload":{"topic":"surgeries on instanton L-space knots"},"citation":"Theorem 1.9"}
{"schema_version":1,"table":"CITE","key":"Example 3.10","payload":{"topic":"the unknot"},"citation":"Example 3.10"}
{"schema_version":1,"table":"CITE","key":"Example 3.11","payload":{"topic":"the right-handed trefoil"},"citation":"Example 3.11"}
{"schema_version":1,"table":"CITE","key":"Example 3.12","payload":{"topic":"the figure eight"},"citation":"Example 3.12"}
{"schema_version":1,"table":"CITE","key":"Definition 4.1","payload":{"topic":"delta"},"citation":"Definition 4.1"}
{"schema_version":1,"table":"CITE","key":"Lemma 4.1","payload":{"topic":"continued fraction convergents"},"citation":"Lemma 4.1"}
{"schema_version":1,"table":"CITE","key":"Proposition 4.2","payload":{"topic":"surgery triads"},"citation":"Proposition 4.2"}
{"schema_version":1,"table":"CITE","key":"Lemma 4.4","payload":{"topic":"slopes 1/n"},"citation":"Lemma 4.4"}
{"schema_version":1,"table":"CITE","key":"Theorem 4.7","payload":{"topic":"rational surgery formula"},"citation":"Theorem 4.7"}
{"schema_version":1,"table":"CITE","key":"Corollary 4.8","payload":{"topic":"lens spaces"},"citation":"Corollary 4.8"}
{"schema_version":1,"table":"CITE","key":"Theorem 1.16","payload":{"topic":"instanton L-space cables"},"citation":"Theorem 1.16"}
{"schema_version":1,"table":"CITE","key":"Theorem 5.1","payload":{"topic":"quasimorphism bound for sums"},"citation":"Theorem 5.1"}
{"schema_version":1,"table":"CITE","key":"Eq. (5.1)","payload":{"topic":"bound for multiples"},"citation":"Eq. (5.1)"}
{"schema_version":1,"table":"CITE","key":"Proposition 5.3","payload":{"topic":"tau as a homogenization"},"citation":"Proposition 5.3"}
{"schema_version":1,"table":"CITE","key":"Theorem 5.4","payload":{"topic":"self-linking bound"},"citation":"Theorem 5.4"}
{"schema_version":1,"table":"CITE","key":"Corollary 5.5","payload":{"topic":"tau at the slice genus"},"citation":"Corollary 5.5"}
{"schema_version":1,"table":"CITE","key":"Corollary 1.6","payload":{"topic":"quasipositive knots"},"citation":"Corollary 1.6"}
{"schema_version":1,"table":"CITE","key":"Corollary 1.9","payload":{"topic":"alternating knots"},"citation":"Corollary 1.9"}
{"schema_version":1,"table":"CITE","key":"Proposition 5.7","payload":{"topic":"crossing changes"},"citation":"Proposition 5.7"}
{"schema_version":1,"table":"CITE","key":"Lemma 6.1","payload":{"topic":"torus knots"},"citation":"Lemma 6.1"}
{"schema_version":1,"table":"CITE","key":"Proposition 6.2","payload":{"topic":"two-bridge surgeries"},"citation":"Proposition 6.2"}
{"schema_version":1,"table":"CITE","key":"Proposition 6.4","payload":{"topic":"even twist knots"},"citation":"Proposition 6.4"}
{"schema_version":1,"table":"CITE","key":"Proposition 6.5","payload":{"topic":"odd twist knots"},"citation":"Proposition 6.5"}
{"schema_version":1,"table":"CITE","key":"Theorem 1.5","payload":{"topic":"twist knots"},"citation":"Theorem 1.5"}
{"schema_version":1,"table":"CITE","key":"Theorem 1.6","payload":{"topic":"pretzels P(n,3,-3)"},"citation":"Theorem 1.6"}
{"schema_version":1,"table":"CITE","key":"Proposition 6.7","payload":{"topic":"pretzel surgery shift"},"citation":"Proposition 6.7"}
{"schema_version":1,"table":"CITE","key":"Theorem 1.8","payload":{"topic":"pretzels P(2n-1,3,2)"},"citation":"Theorem 1.8"}
{"schema_version":1,"table":"CITE","key":"Proposition 6.8","payload":{"topic":"surgeries related to m(5_2)"},"citation":"Proposition 6.8"}
{"schema_version":1,"table":"CITE","key":"Proposition 6.9","payload":{"topic":"surgeries on 8_2, 8_3, 8_4"},"citation":"Proposition 6.9"}
{"schema_version":1,"table":"CITE","key":"Proposition 6.10","payload":{"topic":"Alexander floor for 0-surgery"},"citation":"Proposition 6.10"}
{"schema_version":1,"table":"CITE","key":"Proposition 6.11","payload":{"topic":"surgeries related to P(5,5,-3)"},"citation":"Proposition 6.11"}
{"schema_version":1,"table":"CITE","key":"Proposition 9.3","payload":{"topic":"census triads"},"citation":"Proposition 9.3"}
{"schema_version":1,"table":"CITE","key":"Table 1","payload":{"topic":"nu and r0"},"citation":"Table 1"}
{"schema_version":1,"table":"CITE","key":"Table 2","payload":{"topic":"census dimensions"},"citation":"Table 2"}
{"schema_version":1,"table":"CITE","key":"Table 3","payload":{"topic":"nu and tau through eight crossings"},"citation":"Table 3"}
{"schema_version":1,"table":"CITE","key":"Table 4","payload":{"topic":"surgery dimensions determining r0"},"citation":"Table 4"}
{"schema_version":1,"table":"CITE","key":"Table 5","payload":{"topic":"ten-crossing knots with non-thin odd Khovanov homology"},"citation":"Table 5"}
{"schema_version":1,"table":"CITE","key":"Table 6","payload":{"topic":"census surgeries"},"citation":"Table 6"}
{"schema_version":1,"table":"CITE","key":"Table 7","payload":{"topic":"census branched double covers"},"citation":"Table 7"}
{"schema_version":1,"table":"CITE","key":"Table 8","payload":{"topic":"census triads"},"citation":"Table 8"}
{"schema_version":1,"table":"RULE","key":"R1","payload":{"name":"table lookup"},"citation":"Table 1; Table 3; Table 4; Example 3.10; Example 3.12"}
{"schema_version":1,"table":"RULE","key":"R2","payload":{"name":"mirror"},"citation":"Theorem 3.8; Definition 3.7"}
{"schema_version":1,"table":"RULE","key":"R3","payload":{"name":"slice"},"citation":"Theorem 3.8"}
{"schema_version":1,"table":"RULE","key":"R4","payload":{"name":"amphichiral"},"citation":"Theorem 3.8; Proposition 5.3"}
{"schema_version":1,"table":"RULE","key":"R5","payload":{"name":"quasipositive"},"citation":"Corollary 1.6"}
{"schema_version":1,"table":"RULE","key":"R6","payload":{"name":"alternating"},"citation":"Corollary 1.9"}
{"schema_version":1,"table":"RULE","key":"R7","payload":{"name":"tau at slice genus"},"citation":"Corollary 5.5"}
{"schema_version":1,"table":"RULE","key":"R8","payload":{"name":"positive torus knot"},"citation":"Lemma 6.1"}
{"schema_version":1,"table":"RULE","key":"R9","payload":{"name":"instanton L-space knot"},"citation":"Proposition 3.9; Theorem 1.16"}
{"schema_version":1,"table":"RULE","key":"R10","payload":{"name":"twist knot"},"citation":"Theorem 1.5; Proposition 6.4; Proposition 6.5"}
{"schema_version":1,"table":"RULE","key":"R11","payload":{"name":"pretzel P(n,3,-3)"},"citation":"Theorem 1.6"}
{"schema_version":1,"table":"RULE","key":"R12","payload":{"name":"pretzel P(2n-1,3,2)"},"citation":"Theorem 1.8"}
{"schema_version":1,"table":"RULE","key":"R13","payload":{"name":"connected sum"},"citation":"Proposition 5.3; Theorem 5.1; Eq. (5.1); Theorem 3.8"}
{"schema_version":1,"table":"RULE","key":"R14","payload":{"name":"interval tightening"},"citation":"Proposition 5.3; Theorem 3.8; Definition 3.7; Definition 4.1"}
{"schema_version":1,"table":"RULE","key":"S1","payload":{"name":"rational surgery formula"},"citation":"Theorem 4.7"}
{"schema_version":1,"table":"RULE","key":"S2","payload":{"name":"zero surgery"},"citation":"Theorem 3.8; Example 3.12"}
{"schema_version":1,"table":"RULE","key":"S3","payload":{"name":"lens space"},"citation":"Corollary 4.8"}
{"schema_version":1,"table":"RULE","key":"S4","payload":{"name":"thin branched double cover"},"citation":"Proposition 2.4"}
{"schema_version":1,"table":"RULE","key":"S5","payload":{"name":"exact triangle"},"citation":"Theorem 2.1; Eq. (2.1)"}
{"schema_version":1,"table":"RULE","key":"S6","payload":{"name":"homeomorphism"},"citation":"Proposition 6.2"}
{"schema_version":1,"table":"RULE","key":"S7","payload":{"name":"Euler characteristic"},"citation":"Eq. (2.1)"}
{"schema_version":1,"table":"RULE","key":"S8","payload":{"name":"Alexander floor"},"citation":"Proposition 6.10"}
{"schema_version":1,"table":"RULE","key":"S9","payload":{"name":"census route"},"citation":"Table 2"}
{"schema_version":1,"table":"KNOT","key":"3_1","payload":{"aliases":["TB(2,2)","Tw(1)","T(-2,3)"],"genus":1,"slice_genus":1,"signature":2,"determinant":3,"alexander":[-1,1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"4_1","payload":{"aliases":["TB(-2,2)","TB(-2,-3)","TB(2,-2)","Tw(2)"],"genus":1,"slice_genus":{"lo":1,"hi":1},"signature":0,"determinant":5,"alexander":[3,-1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":true,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"5_1","payload":{"aliases":["T(-2,5)"],"genus":2,"slice_genus":2,"signature":4,"determinant":5,"alexander":[1,-1,1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"5_2","payload":{"aliases":["TB(2,4)","Tw(3)","m(TB(2,-3))","m(TB(-2,-4))"],"genus":1,"slice_genus":1,"signature":2,"determinant":7,"alexander":[-3,2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"6_1","payload":{"aliases":["Tw(4)","P(1,3,-3)","m(TB(2,-4))","m(TB(-2,-5))"],"genus":1,"slice_genus":0,"signature":0,"determinant":9,"alexander":[5,-2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":true,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"6_2","payload":{"aliases":["TB(-3,-4)","m(P(1,3,2))"],"genus":2,"slice_genus":1,"signature":2,"determinant":11,"alexander":[-3,3,-1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"6_3","payload":{"aliases":[],"genus":2,"slice_genus":{"lo":1,"hi":2},"signature":0,"determinant":13,"alexander":[5,-3,1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":true,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"7_1","payload":{"aliases":["T(-2,7)"],"genus":3,"slice_genus":3,"signature":6,"determinant":7,"alexander":[-1,1,-1,1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"7_2","payload":{"aliases":["Tw(5)","m(TB(2,-5))"],"genus":1,"slice_genus":1,"signature":2,"determinant":11,"alexander":[-5,3],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"7_3","payload":{"aliases":["TB(-3,4)"],"genus":2,"slice_genus":2,"signature":-4,"determinant":13,"alexander":[3,-3,2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"7_4","payload":{"aliases":["TB(-4,-4)"],"genus":1,"slice_genus":1,"signature":-2,"determinant":15,"alexander":[-7,4],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"7_5","payload":{"aliases":[],"genus":2,"slice_genus":2,"signature":4,"determinant":17,"alexander":[5,-4,2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"7_6","payload":{"aliases":[],"genus":2,"slice_genus":1,"signature":2,"determinant":19,"alexander":[-7,5,-1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"7_7","payload":{"aliases":[],"genus":2,"slice_genus":{"lo":1,"hi":2},"signature":0,"determinant":21,"alexander":[9,-5,1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_1","payload":{"aliases":["Tw(6)"],"genus":1,"slice_genus":{"lo":1,"hi":1},"signature":0,"determinant":13,"alexander":[7,-3],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_2","payload":{"aliases":["TB(-3,-6)"],"genus":3,"slice_genus":2,"signature":4,"determinant":17,"alexander":[3,-3,3,-1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_3","payload":{"aliases":["TB(-4,4)"],"genus":1,"slice_genus":{"lo":1,"hi":1},"signature":0,"determinant":17,"alexander":[9,-4],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":true,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_4","payload":{"aliases":["TB(-5,-4)"],"genus":2,"slice_genus":1,"signature":2,"determinant":19,"alexander":[-5,5,-2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_5","payload":{"aliases":["P(3,3,2)"],"genus":3,"slice_genus":2,"signature":-4,"determinant":21,"alexander":[5,-4,3,-1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_6","payload":{"aliases":[],"genus":2,"slice_genus":1,"signature":2,"determinant":23,"alexander":[-7,6,-2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_7","payload":{"aliases":[],"genus":3,"slice_genus":1,"signature":-2,"determinant":23,"alexander":[-5,5,-3,1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_8","payload":{"aliases":[],"genus":2,"slice_genus":0,"signature":0,"determinant":25,"alexander":[9,-6,2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":true,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3; Proposition 6.11"}
{"schema_version":1,"table":"KNOT","key":"8_9","payload":{"aliases":[],"genus":3,"slice_genus":0,"signature":0,"determinant":25,"alexander":[7,-5,3,-1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":true,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_10","payload":{"aliases":[],"genus":3,"slice_genus":1,"signature":-2,"determinant":27,"alexander":[-7,6,-3,1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_11","payload":{"aliases":[],"genus":2,"slice_genus":1,"signature":2,"determinant":27,"alexander":[-9,7,-2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_12","payload":{"aliases":[],"genus":2,"slice_genus":{"lo":1,"hi":2},"signature":0,"determinant":29,"alexander":[13,-7,1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":true,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_13","payload":{"aliases":[],"genus":2,"slice_genus":{"lo":1,"hi":2},"signature":0,"determinant":29,"alexander":[11,-7,2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_14","payload":{"aliases":[],"genus":2,"slice_genus":1,"signature":2,"determinant":31,"alexander":[-11,8,-2],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_15","payload":{"aliases":[],"genus":2,"slice_genus":2,"signature":4,"determinant":33,"alexander":[11,-8,3],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_16","payload":{"aliases":[],"genus":3,"slice_genus":1,"signature":2,"determinant":35,"alexander":[-9,8,-4,1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_17","payload":{"aliases":[],"genus":3,"slice_genus":{"lo":1,"hi":3},"signature":0,"determinant":37,"alexander":[11,-8,4,-1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":true,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_18","payload":{"aliases":[],"genus":3,"slice_genus":{"lo":1,"hi":3},"signature":0,"determinant":45,"alexander":[13,-10,5,-1],"max_self_linking":null,"alternating":true,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":true,"homogeneous":true,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_19","payload":{"aliases":["T(3,4)"],"genus":3,"slice_genus":3,"signature":-6,"determinant":3,"alexander":[1,0,-1,1],"max_self_linking":null,"alternating":false,"quasipositive":true,"mirror_quasipositive":null,"positive":true,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":null,"instanton_lspace":true,"mirror_instanton_lspace":null,"thin_odd_khovanov":false,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_20","payload":{"aliases":["P(2,3,-3)"],"genus":2,"slice_genus":0,"signature":0,"determinant":9,"alexander":[3,-2,1],"max_self_linking":null,"alternating":false,"quasipositive":true,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":true,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"8_21","payload":{"aliases":[],"genus":2,"slice_genus":1,"signature":2,"determinant":15,"alexander":[-5,4,-1],"max_self_linking":null,"alternating":false,"quasipositive":null,"mirror_quasipositive":true,"positive":null,"mirror_positive":null,"slice":false,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":null},"citation":"Table 3"}
{"schema_version":1,"table":"KNOT","key":"9_47","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":27,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":27},"citation":"Table 7"}
{"schema_version":1,"table":"KNOT","key":"9_49","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":25,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":25},"citation":"Table 7"}
{"schema_version":1,"table":"KNOT","key":"10_155","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":25,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":25},"citation":"Table 7"}
{"schema_version":1,"table":"KNOT","key":"10_156","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":35,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":35},"citation":"Table 7"}
{"schema_version":1,"table":"KNOT","key":"10_160","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":21,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":21},"citation":"Table 7"}
{"schema_version":1,"table":"KNOT","key":"10_163","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":35,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":35},"citation":"Table 7"}
{"schema_version":1,"table":"KNOT","key":"K11n118","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":21,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":21},"citation":"Table 7"}
{"schema_version":1,"table":"KNOT","key":"K11n92","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":15,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":true,"odd_khovanov_dim":15},"citation":"Table 7"}
{"schema_version":1,"table":"KNOT","key":"10_124","payload":{"aliases":["T(3,5)"],"genus":null,"slice_genus":null,"signature":null,"determinant":1,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":false,"odd_khovanov_dim":3},"citation":"Table 5"}
{"schema_version":1,"table":"KNOT","key":"10_139","payload":{"aliases":[],"genus":4,"slice_genus":null,"signature":null,"determinant":3,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":true,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":false,"odd_khovanov_dim":7},"citation":"Table 5"}
{"schema_version":1,"table":"KNOT","key":"10_145","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":3,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":false,"odd_khovanov_dim":7},"citation":"Table 5"}
{"schema_version":1,"table":"KNOT","key":"10_152","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":11,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":false,"odd_khovanov_dim":15},"citation":"Table 5"}
{"schema_version":1,"table":"KNOT","key":"10_153","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":1,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":false,"odd_khovanov_dim":9},"citation":"Table 5"}
{"schema_version":1,"table":"KNOT","key":"10_154","payload":{"aliases":[],"genus":3,"slice_genus":null,"signature":null,"determinant":13,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":true,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":false,"odd_khovanov_dim":17},"citation":"Table 5"}
{"schema_version":1,"table":"KNOT","key":"10_161","payload":{"aliases":[],"genus":null,"slice_genus":null,"signature":null,"determinant":5,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":null,"mirror_instanton_lspace":null,"thin_odd_khovanov":false,"odd_khovanov_dim":9},"citation":"Table 5"}
{"schema_version":1,"table":"KNOT","key":"K12n242","payload":{"aliases":["P(-2,3,7)"],"genus":5,"slice_genus":null,"signature":null,"determinant":null,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":true,"mirror_instanton_lspace":null,"thin_odd_khovanov":null,"odd_khovanov_dim":null},"citation":"Table 6"}
{"schema_version":1,"table":"KNOT","key":"k5_1","payload":{"aliases":[],"genus":11,"slice_genus":null,"signature":null,"determinant":null,"alexander":null,"max_self_linking":null,"alternating":null,"quasipositive":null,"mirror_quasipositive":null,"positive":null,"mirror_positive":null,"slice":null,"amphichiral":null,"homogeneous":null,"instanton_lspace":true,"mirror_instanton_lspace":null,"thin_odd_khovanov":null,"odd_khovanov_dim":null},"citation":"Table 6"}
{"schema_version":1,"table":"EX","key":"U","payload":{"aliases":["P(-1,3,2)"],"nu":0,"r0":0,"shape":"W","zero_surgery_mu":0},"citation":"Example 3.10; Theorem 1.8"}
{"schema_version":1,"table":"EX","key":"4_1","payload":{"aliases":[],"nu":null,"r0":null,"shape":null,"zero_surgery_mu":2},"citation":"Example 3.12"}
{"schema_version":1,"table":"T1","key":"3_1","payload":{"nu":-1,"r0":1},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"4_1","payload":{"nu":0,"r0":2},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"5_1","payload":{"nu":-3,"r0":3},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"5_2","payload":{"nu":-1,"r0":3},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"6_1","payload":{"nu":0,"r0":4},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"6_2","payload":{"nu":-1,"r0":5},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"6_3","payload":{"nu":0,"r0":6},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"7_1","payload":{"nu":-5,"r0":5},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"7_2","payload":{"nu":-1,"r0":5},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"7_3","payload":{"nu":3,"r0":7},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"7_4","payload":{"nu":1,"r0":7},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"8_1","payload":{"nu":0,"r0":6},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"8_2","payload":{"nu":-3,"r0":9},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"8_3","payload":{"nu":0,"r0":8},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"8_4","payload":{"nu":-1,"r0":9},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"8_5","payload":{"nu":3,"r0":11},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"8_6","payload":{"nu":-1,"r0":11},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"8_8","payload":{"nu":0,"r0":12},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"8_19","payload":{"nu":5,"r0":5},"citation":"Table 1"}
{"schema_version":1,"table":"T1","key":"8_20","payload":{"nu":0,"r0":4},"citation":"Table 1"}
{"schema_version":1,"table":"T2","key":"0","payload":{"name":"m003(-3,1)","h1":25,"dim":25,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"1","payload":{"name":"m003(-2,3)","h1":5,"dim":7,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"2","payload":{"name":"m007(3,1)","h1":18,"dim":18,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"3","payload":{"name":"m003(-4,3)","h1":25,"dim":25,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"4","payload":{"name":"m004(6,1)","h1":6,"dim":8,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"5","payload":{"name":"m004(1,2)","h1":1,"dim":5,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"6","payload":{"name":"m009(4,1)","h1":6,"dim":8,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"7","payload":{"name":"m003(-3,4)","h1":10,"dim":null,"dim_candidates":[10,12]},"citation":"Table 2; Proposition 9.3"}
{"schema_version":1,"table":"T2","key":"8","payload":{"name":"m003(-4,1)","h1":35,"dim":35,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"9","payload":{"name":"m004(3,2)","h1":3,"dim":7,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"10","payload":{"name":"m004(7,1)","h1":7,"dim":9,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"11","payload":{"name":"m004(5,2)","h1":5,"dim":9,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"12","payload":{"name":"m003(-5,3)","h1":35,"dim":35,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"13","payload":{"name":"m007(1,2)","h1":21,"dim":21,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"14","payload":{"name":"m007(4,1)","h1":21,"dim":21,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"15","payload":{"name":"m007(3,2)","h1":27,"dim":27,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"16","payload":{"name":"m006(3,1)","h1":30,"dim":30,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"17","payload":{"name":"m003(-5,4)","h1":30,"dim":30,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"18","payload":{"name":"m006(-3,2)","h1":15,"dim":15,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T2","key":"19","payload":{"name":"m015(5,1)","h1":7,"dim":9,"dim_candidates":null},"citation":"Table 2"}
{"schema_version":1,"table":"T3","key":"0_1","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"3_1","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"4_1","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"5_1","payload":{"nu":-3,"tau":-2,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"5_2","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"6_1","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"6_2","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"6_3","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"7_1","payload":{"nu":-5,"tau":-3,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"7_2","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"7_3","payload":{"nu":3,"tau":2,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"7_4","payload":{"nu":1,"tau":1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"7_5","payload":{"nu":-3,"tau":-2,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"7_6","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"7_7","payload":{"nu":null,"tau":0,"nu_interval":[-1,1]},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_1","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_2","payload":{"nu":-3,"tau":-2,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_3","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_4","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_5","payload":{"nu":3,"tau":2,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_6","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_7","payload":{"nu":1,"tau":1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_8","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_9","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_10","payload":{"nu":1,"tau":1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_11","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_12","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_13","payload":{"nu":null,"tau":0,"nu_interval":[-1,1]},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_14","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_15","payload":{"nu":-3,"tau":-2,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_16","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_17","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_18","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_19","payload":{"nu":5,"tau":3,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_20","payload":{"nu":0,"tau":0,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T3","key":"8_21","payload":{"nu":-1,"tau":-1,"nu_interval":null},"citation":"Table 3"}
{"schema_version":1,"table":"T4","key":"3_1","payload":{"n":-5,"dim":5,"nu":-1,"r0":1,"homeomorphic_to":null,"same_knot":"T(-2,3)"},"citation":"Table 4; Lemma 6.1"}
{"schema_version":1,"table":"T4","key":"4_1","payload":{"n":1,"dim":3,"nu":0,"r0":2,"homeomorphic_to":"surg(T(2,3); -1/1)","same_knot":null},"citation":"Table 4; Proposition 6.2"}
{"schema_version":1,"table":"T4","key":"5_1","payload":{"n":-9,"dim":9,"nu":-3,"r0":3,"homeomorphic_to":null,"same_knot":"T(-2,5)"},"citation":"Table 4; Lemma 6.1"}
{"schema_version":1,"table":"T4","key":"5_2","payload":{"n":-1,"dim":3,"nu":-1,"r0":3,"homeomorphic_to":null,"same_knot":"Tw(3)"},"citation":"Table 4; Proposition 6.5"}
{"schema_version":1,"table":"T4","key":"6_1","payload":{"n":1,"dim":5,"nu":0,"r0":4,"homeomorphic_to":null,"same_knot":"Tw(4)"},"citation":"Table 4; Proposition 6.4"}
{"schema_version":1,"table":"T4","key":"6_2","payload":{"n":-9,"dim":13,"nu":-1,"r0":5,"homeomorphic_to":"surg(m(5_2); 9/2)","same_knot":null},"citation":"Table 4; Proposition 6.8"}
{"schema_version":1,"table":"T4","key":"6_3","payload":{"n":-1,"dim":7,"nu":0,"r0":6,"homeomorphic_to":"surg(P(5,5,-3); 1/1)","same_knot":null},"citation":"Table 4; Proposition 6.11"}
{"schema_version":1,"table":"T4","key":"7_1","payload":{"n":-13,"dim":13,"nu":-5,"r0":5,"homeomorphic_to":null,"same_knot":"T(-2,7)"},"citation":"Table 4; Lemma 6.1"}
{"schema_version":1,"table":"T4","key":"7_2","payload":{"n":-1,"dim":5,"nu":-1,"r0":5,"homeomorphic_to":null,"same_knot":"Tw(5)"},"citation":"Table 4; Proposition 6.5"}
{"schema_version":1,"table":"T4","key":"7_3","payload":{"n":7,"dim":11,"nu":3,"r0":7,"homeomorphic_to":"surg(m(5_2); 7/2)","same_knot":null},"citation":"Table 4; Proposition 6.8"}
{"schema_version":1,"table":"T4","key":"7_4","payload":{"n":1,"dim":7,"nu":1,"r0":7,"homeomorphic_to":"surg(m(5_2); 1/2)","same_knot":null},"citation":"Table 4; Proposition 6.8"}
{"schema_version":1,"table":"T4","key":"8_1","payload":{"n":1,"dim":7,"nu":0,"r0":6,"homeomorphic_to":null,"same_knot":"Tw(6)"},"citation":"Table 4; Proposition 6.4"}
{"schema_version":1,"table":"T4","key":"8_2","payload":{"n":-13,"dim":19,"nu":-3,"r0":9,"homeomorphic_to":"surg(m(5_2); 13/3)","same_knot":null},"citation":"Table 4; Proposition 6.9"}
{"schema_version":1,"table":"T4","key":"8_3","payload":{"n":1,"dim":9,"nu":0,"r0":8,"homeomorphic_to":"surg(m(5_2); -1/2)","same_knot":null},"citation":"Table 4; Proposition 6.9"}
{"schema_version":1,"table":"T4","key":"8_4","payload":{"n":-7,"dim":15,"nu":-1,"r0":9,"homeomorphic_to":"surg(m(6_1); 7/2)","same_knot":null},"citation":"Table 4; Proposition 6.9"}
{"schema_version":1,"table":"T4","key":"8_5","payload":{"n":7,"dim":15,"nu":3,"r0":11,"homeomorphic_to":null,"same_knot":"P(3,3,2)"},"citation":"Table 4; Theorem 1.8"}
{"schema_version":1,"table":"T4","key":"8_6","payload":{"n":-1,"dim":11,"nu":-1,"r0":11,"homeomorphic_to":"surg(P(5,5,-3); -1/2)","same_knot":null},"citation":"Table 4; Proposition 6.11"}
{"schema_version":1,"table":"T4","key":"8_8","payload":{"n":-1,"dim":13,"nu":0,"r0":12,"homeomorphic_to":"surg(P(5,5,-3); 1/2)","same_knot":null},"citation":"Table 4; Proposition 6.11"}
{"schema_version":1,"table":"T4","key":"8_19","payload":{"n":11,"dim":11,"nu":5,"r0":5,"homeomorphic_to":null,"same_knot":"T(3,4)"},"citation":"Table 4; Lemma 6.1"}
{"schema_version":1,"table":"T4","key":"8_20","payload":{"n":1,"dim":5,"nu":0,"r0":4,"homeomorphic_to":null,"same_knot":"P(2,3,-3)"},"citation":"Table 4; Theorem 1.6"}
{"schema_version":1,"table":"T5","key":"10_124","payload":{"det":1,"odd_khovanov_dim":3,"sigma2":"surg(3_1; -1/1)","dim":{"exact":1}},"citation":"Table 5"}
{"schema_version":1,"table":"T5","key":"10_139","payload":{"det":3,"odd_khovanov_dim":7,"sigma2":"surg(4_1; -3/1)","dim":{"exact":5}},"citation":"Table 5"}
{"schema_version":1,"table":"T5","key":"10_145","payload":{"det":3,"odd_khovanov_dim":7,"sigma2":"surg(5_2; -3/1)","dim":{"exact":5}},"citation":"Table 5"}
{"schema_version":1,"table":"T5","key":"10_152","payload":{"det":11,"odd_khovanov_dim":15,"sigma2":null,"dim":null},"citation":"Table 5"}
{"schema_version":1,"table":"T5","key":"10_153","payload":{"det":1,"odd_khovanov_dim":9,"sigma2":"surg(P(7,3,-3); 1/1)","dim":{"exact":5}},"citation":"Table 5"}
{"schema_version":1,"table":"T5","key":"10_154","payload":{"det":13,"odd_khovanov_dim":17,"sigma2":"surg(10_139; 13/1)","dim":{"candidates":[13,15]}},"citation":"Table 5; Proposition 5.7"}
{"schema_version":1,"table":"T5","key":"10_161","payload":{"det":5,"odd_khovanov_dim":9,"sigma2":"surg(4_1; 5/1)","dim":{"exact":7}},"citation":"Table 5"}
{"schema_version":1,"table":"T6","key":"1","payload":{"name":"m003(-2,3)","snappy_knot":"4_1(5,1)","manifold":"surg(4_1; 5/1)","h1":5,"dim":7},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"4","payload":{"name":"m004(6,1)","snappy_knot":"4_1(6,1)","manifold":"surg(4_1; 6/1)","h1":6,"dim":8},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"5","payload":{"name":"m004(1,2)","snappy_knot":"4_1(1,2)","manifold":"surg(4_1; 1/2)","h1":1,"dim":5},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"6","payload":{"name":"m009(4,1)","snappy_knot":"5_2(6,1)","manifold":"surg(m(5_2); 6/1)","h1":6,"dim":8},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"9","payload":{"name":"m004(3,2)","snappy_knot":"4_1(3,2)","manifold":"surg(4_1; 3/2)","h1":3,"dim":7},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"10","payload":{"name":"m004(7,1)","snappy_knot":"4_1(7,1)","manifold":"surg(4_1; 7/1)","h1":7,"dim":9},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"11","payload":{"name":"m004(5,2)","snappy_knot":"4_1(5,2)","manifold":"surg(4_1; 5/2)","h1":5,"dim":9},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"12","payload":{"name":"m003(-5,3)","snappy_knot":"K12n242(35,2)","manifold":"surg(K12n242; 35/2)","h1":35,"dim":35},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"13","payload":{"name":"m007(1,2)","snappy_knot":"K12n242(21,1)","manifold":"surg(K12n242; 21/1)","h1":21,"dim":21},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"17","payload":{"name":"m003(-5,4)","snappy_knot":"K5_1(30,1)","manifold":"surg(k5_1; 30/1)","h1":30,"dim":30},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"18","payload":{"name":"m006(-3,2)","snappy_knot":"K12n242(15,1)","manifold":"surg(K12n242; 15/1)","h1":15,"dim":15},"citation":"Table 6"}
{"schema_version":1,"table":"T6","key":"19","payload":{"name":"m015(5,1)","snappy_knot":"5_2(7,1)","manifold":"surg(m(5_2); 7/1)","h1":7,"dim":9},"citation":"Table 6"}
{"schema_version":1,"table":"T7","key":"0","payload":{"name":"m003(-3,1)","knot":"9_49","quasi_alternating":true,"h1":25,"dim":25},"citation":"Table 7"}
{"schema_version":1,"table":"T7","key":"3","payload":{"name":"m003(-4,3)","knot":"10_155","quasi_alternating":true,"h1":25,"dim":25},"citation":"Table 7"}
{"schema_version":1,"table":"T7","key":"8","payload":{"name":"m003(-4,1)","knot":"10_163","quasi_alternating":true,"h1":35,"dim":35},"citation":"Table 7"}
{"schema_version":1,"table":"T7","key":"12","payload":{"name":"m003(-5,3)","knot":"10_156","quasi_alternating":true,"h1":35,"dim":35},"citation":"Table 7"}
{"schema_version":1,"table":"T7","key":"13","payload":{"name":"m007(1,2)","knot":"10_160","quasi_alternating":true,"h1":21,"dim":21},"citation":"Table 7"}
{"schema_version":1,"table":"T7","key":"14","payload":{"name":"m007(4,1)","knot":"K11n118","quasi_alternating":null,"h1":21,"dim":21},"citation":"Table 7"}
{"schema_version":1,"table":"T7","key":"15","payload":{"name":"m007(3,2)","knot":"9_47","quasi_alternating":true,"h1":27,"dim":27},"citation":"Table 7"}
{"schema_version":1,"table":"T7","key":"18","payload":{"name":"m006(-3,2)","knot":"K11n92","quasi_alternating":false,"h1":15,"dim":15},"citation":"Table 7"}
{"schema_version":1,"table":"T8","key":"2","payload":{"name":"m007(3,1)","h1":18,"m0":{"name":"m007(1,0)","manifold":"lens(3,1)","h1":3,"dim":3},"m1":{"name":"m007(2,1)","manifold":"dcover(8_21)","h1":15,"dim":15},"result":{"exact":18}},"citation":"Table 8; Proposition 9.3"}
{"schema_version":1,"table":"T8","key":"7","payload":{"name":"m003(-3,4)","h1":10,"m0":{"name":"m003(-1,1)","manifold":"lens(5,1)","h1":5,"dim":5},"m1":{"name":"m003(-2,3)","manifold":"census(1)","h1":5,"dim":7},"result":{"candidates":[10,12]}},"citation":"Table 8; Proposition 9.3"}
{"schema_version":1,"table":"T8","key":"16","payload":{"name":"m006(3,1)","h1":30,"m0":{"name":"m006(1,0)","manifold":"lens(5,2)","h1":5,"dim":5},"m1":{"name":"m006(2,1)","manifold":"census(0)","h1":25,"dim":25},"result":{"exact":30}},"citation":"Table 8; Proposition 9.3"}
{"schema_version":1,"table":"IDENT","key":"6_2:-9/1","payload":{"lhs":"surg(6_2; -9/1)","rhs":"surg(m(5_2); 9/2)"},"citation":"Proposition 6.8"}
{"schema_version":1,"table":"IDENT","key":"7_3:7/1","payload":{"lhs":"surg(7_3; 7/1)","rhs":"surg(m(5_2); 7/2)"},"citation":"Proposition 6.8"}
{"schema_version":1,"table":"IDENT","key":"7_4:1/1","payload":{"lhs":"surg(7_4; 1/1)","rhs":"surg(m(5_2); 1/2)"},"citation":"Proposition 6.8"}
{"schema_version":1,"table":"IDENT","key":"8_2:-13/1","payload":{"lhs":"surg(8_2; -13/1)","rhs":"surg(m(5_2); 13/3)"},"citation":"Proposition 6.9"}
{"schema_version":1,"table":"IDENT","key":"8_2:-11/1","payload":{"lhs":"surg(8_2; -11/1)","rhs":"surg(4_1; 11/3)"},"citation":"Proposition 6.9"}
{"schema_version":1,"table":"IDENT","key":"8_3:1/1","payload":{"lhs":"surg(8_3; 1/1)","rhs":"surg(m(5_2); -1/2)"},"citation":"Proposition 6.9"}
{"schema_version":1,"table":"IDENT","key":"8_3:-1/1","payload":{"lhs":"surg(8_3; -1/1)","rhs":"surg(m(6_1); -1/2)"},"citation":"Proposition 6.9"}
{"schema_version":1,"table":"IDENT","key":"8_4:-9/1","payload":{"lhs":"surg(8_4; -9/1)","rhs":"surg(m(7_2); 9/2)"},"citation":"Proposition 6.9"}
{"schema_version":1,"table":"IDENT","key":"8_4:-7/1","payload":{"lhs":"surg(8_4; -7/1)","rhs":"surg(m(6_1); 7/2)"},"citation":"Proposition 6.9"}
{"schema_version":1,"table":"IDENT","key":"6_2:-1/1","payload":{"lhs":"surg(6_2; -1/1)","rhs":"surg(P(5,5,-3); -1/1)"},"citation":"Proposition 6.11"}
{"schema_version":1,"table":"IDENT","key":"6_3:-1/1","payload":{"lhs":"surg(6_3; -1/1)","rhs":"surg(P(5,5,-3); 1/1)"},"citation":"Proposition 6.11"}
{"schema_version":1,"table":"IDENT","key":"8_6:-1/1","payload":{"lhs":"surg(8_6; -1/1)","rhs":"surg(P(5,5,-3); -1/2)"},"citation":"Proposition 6.11"}
{"schema_version":1,"table":"IDENT","key":"8_8:-1/1","payload":{"lhs":"surg(8_8; -1/1)","rhs":"surg(P(5,5,-3); 1/2)"},"citation":"Proposition 6.11"}
{"schema_version":1,"table":"TRI","key":"10_139:14/1","payload":{"target":"surg(10_139; 14/1)","m0":"lens(9,2)","m1":"surg(4_1; 5/1)"},"citation":"Table 5; Theorem 2.1"}
)ISHARP";

}  // namespace isharp
