#include "data_tables.hpp"

namespace exg::data {

namespace {

// Curated tables. Conventions:
//  - "chars" is a characteristic predicate ("any", "p=2", "p!=2", "p>=23",
//    "p in {..}", "p notin {..}"); p = 0 means characteristic zero and
//    satisfies the "!=", "notin" and ">=" forms.
//  - delta-parametrized integers are stored as base + coeff*[p == prime]
//    via the fields (<name>, <name>_delta_prime, <name>_delta_coeff).
//  - rationals are (num [, num_delta_*]) over "den".
//  - "citation" names the internal table a row belongs to, for audit output.
const char* const kCuratedJson = R"JSON(
{
  "format_version": 1,
  "subgroups": [
    {"ambient":"E8","kind":"subsystem","label":"D8","descriptor":"D8","dim_m0":120,"component_group_order":1,"chars":"any","citation":"maximal-rank table, E8: D8"},
    {"ambient":"E8","kind":"subsystem","label":"A1E7","descriptor":"A1E7","dim_m0":136,"component_group_order":1,"chars":"any","citation":"maximal-rank table, E8: A1E7"},
    {"ambient":"E8","kind":"subsystem","label":"A8","descriptor":"A8","dim_m0":80,"component_group_order":2,"chars":"any","citation":"maximal-rank table, E8: A8"},
    {"ambient":"E8","kind":"subsystem","label":"A2E6","descriptor":"A2E6","dim_m0":86,"component_group_order":2,"chars":"any","citation":"maximal-rank table, E8: A2E6"},
    {"ambient":"E8","kind":"subsystem","label":"A4^2","descriptor":"A4^2","dim_m0":48,"component_group_order":4,"chars":"any","citation":"maximal-rank table, E8: A4^2"},
    {"ambient":"E8","kind":"subsystem","label":"D4^2","descriptor":"D4^2","dim_m0":56,"component_group_order":12,"chars":"any","citation":"maximal-rank table, E8: D4^2 (S3 x Z2)"},
    {"ambient":"E8","kind":"subsystem","label":"A2^4","descriptor":"A2^4","dim_m0":32,"component_group_order":48,"chars":"any","citation":"maximal-rank table, E8: A2^4 (GL2(3))"},
    {"ambient":"E8","kind":"subsystem","label":"A1^8","descriptor":"A1^8","dim_m0":24,"component_group_order":1344,"chars":"any","citation":"maximal-rank table, E8: A1^8 (AGL3(2))"},
    {"ambient":"E8","kind":"subsystem","label":"T8","descriptor":"T8","dim_m0":8,"component_group_order":696729600,"chars":"any","citation":"maximal-rank table, E8: T8 (Weyl group)"},
    {"ambient":"E8","kind":"curated","label":"A1(a)","descriptor":"A1","dim_m0":3,"component_group_order":1,"chars":"p>=23","citation":"low-rank maximal table, E8: A1, first class (p>=23)"},
    {"ambient":"E8","kind":"curated","label":"A1(b)","descriptor":"A1","dim_m0":3,"component_group_order":1,"chars":"p>=29","citation":"low-rank maximal table, E8: A1, second class (p>=29)"},
    {"ambient":"E8","kind":"curated","label":"A1(c)","descriptor":"A1","dim_m0":3,"component_group_order":1,"chars":"p>=31","citation":"low-rank maximal table, E8: A1, third class (p>=31)"},
    {"ambient":"E8","kind":"curated","label":"B2","descriptor":"B2","dim_m0":10,"component_group_order":1,"chars":"p>=5","citation":"low-rank maximal table, E8: B2 (p>=5)"},
    {"ambient":"E8","kind":"curated","label":"A1A2","descriptor":"A1A2","dim_m0":11,"component_group_order":2,"chars":"p notin {2,3}","citation":"low-rank maximal table, E8: A1A2 (p!=2,3)"},
    {"ambient":"E8","kind":"curated","label":"A1G2^2","descriptor":"A1G2^2","dim_m0":31,"component_group_order":2,"chars":"p!=2","citation":"low-rank maximal table, E8: A1G2^2 (p!=2)"},
    {"ambient":"E8","kind":"curated","label":"G2F4","descriptor":"G2F4","dim_m0":66,"component_group_order":1,"chars":"any","citation":"low-rank maximal table, E8: G2F4"},
    {"ambient":"E8","kind":"curated","label":"A1xS5","descriptor":"A1","dim_m0":3,"component_group_order":120,"chars":"p notin {2,3,5}","citation":"special maximal subgroups, E8: A1 x S5 (p!=2,3,5)"},

    {"ambient":"E7","kind":"subsystem","label":"A1D6","descriptor":"A1D6","dim_m0":69,"component_group_order":1,"chars":"any","citation":"maximal-rank table, E7: A1D6"},
    {"ambient":"E7","kind":"subsystem","label":"A7","descriptor":"A7","dim_m0":63,"component_group_order":2,"chars":"any","citation":"maximal-rank table, E7: A7"},
    {"ambient":"E7","kind":"subsystem","label":"A2A5","descriptor":"A2A5","dim_m0":43,"component_group_order":2,"chars":"any","citation":"maximal-rank table, E7: A2A5"},
    {"ambient":"E7","kind":"subsystem","label":"A1^3D4","descriptor":"A1^3D4","dim_m0":37,"component_group_order":6,"chars":"any","citation":"maximal-rank table, E7: A1^3D4 (S3)"},
    {"ambient":"E7","kind":"subsystem","label":"A1^7","descriptor":"A1^7","dim_m0":21,"component_group_order":168,"chars":"any","citation":"maximal-rank table, E7: A1^7 (GL3(2))"},
    {"ambient":"E7","kind":"subsystem","label":"E6T1","descriptor":"E6T1","dim_m0":79,"component_group_order":2,"chars":"any","citation":"maximal-rank table, E7: E6T1"},
    {"ambient":"E7","kind":"subsystem","label":"T7","descriptor":"T7","dim_m0":7,"component_group_order":2903040,"chars":"any","citation":"maximal-rank table, E7: T7 (Weyl group)"},
    {"ambient":"E7","kind":"curated","label":"A1(a)","descriptor":"A1","dim_m0":3,"component_group_order":1,"chars":"p>=17","citation":"low-rank maximal table, E7: A1, first class (p>=17)"},
    {"ambient":"E7","kind":"curated","label":"A1(b)","descriptor":"A1","dim_m0":3,"component_group_order":1,"chars":"p>=19","citation":"low-rank maximal table, E7: A1, second class (p>=19)"},
    {"ambient":"E7","kind":"curated","label":"A2","descriptor":"A2","dim_m0":8,"component_group_order":2,"chars":"p>=5","citation":"low-rank maximal table, E7: A2 (p>=5)"},
    {"ambient":"E7","kind":"curated","label":"A1^2","descriptor":"A1^2","dim_m0":6,"component_group_order":1,"chars":"p notin {2,3}","citation":"low-rank maximal table, E7: A1^2 (p!=2,3)"},
    {"ambient":"E7","kind":"curated","label":"A1G2","descriptor":"A1G2","dim_m0":17,"component_group_order":1,"chars":"p!=2","citation":"low-rank maximal table, E7: A1G2 (p!=2)"},
    {"ambient":"E7","kind":"curated","label":"A1F4","descriptor":"A1F4","dim_m0":55,"component_group_order":1,"chars":"any","citation":"low-rank maximal table, E7: A1F4"},
    {"ambient":"E7","kind":"curated","label":"G2C3","descriptor":"G2C3","dim_m0":35,"component_group_order":1,"chars":"any","citation":"low-rank maximal table, E7: G2C3"},
    {"ambient":"E7","kind":"curated","label":"(2^2xD4).S3","descriptor":"D4","dim_m0":28,"component_group_order":24,"chars":"p!=2","citation":"special maximal subgroups, E7: (2^2 x D4).S3 (p!=2)"},

    {"ambient":"E6","kind":"subsystem","label":"A1A5","descriptor":"A1A5","dim_m0":38,"component_group_order":1,"chars":"any","citation":"maximal-rank table, E6: A1A5"},
    {"ambient":"E6","kind":"subsystem","label":"A2^3","descriptor":"A2^3","dim_m0":24,"component_group_order":6,"chars":"any","citation":"maximal-rank table, E6: A2^3 (S3)"},
    {"ambient":"E6","kind":"subsystem","label":"D4T2","descriptor":"D4T2","dim_m0":30,"component_group_order":6,"chars":"any","citation":"maximal-rank table, E6: D4T2 (S3)"},
    {"ambient":"E6","kind":"subsystem","label":"T6","descriptor":"T6","dim_m0":6,"component_group_order":51840,"chars":"any","citation":"maximal-rank table, E6: T6 (Weyl group)"},
    {"ambient":"E6","kind":"curated","label":"A2","descriptor":"A2","dim_m0":8,"component_group_order":2,"chars":"p notin {2,3}","citation":"low-rank maximal table, E6: A2 (p!=2,3)"},
    {"ambient":"E6","kind":"curated","label":"G2","descriptor":"G2","dim_m0":14,"component_group_order":1,"chars":"p!=7","citation":"low-rank maximal table, E6: G2 (p!=7)"},
    {"ambient":"E6","kind":"curated","label":"C4","descriptor":"C4","dim_m0":36,"component_group_order":1,"chars":"p!=2","citation":"low-rank maximal table, E6: C4 (p!=2)"},
    {"ambient":"E6","kind":"curated","label":"F4","descriptor":"F4","dim_m0":52,"component_group_order":1,"chars":"any","citation":"low-rank maximal table, E6: F4"},
    {"ambient":"E6","kind":"curated","label":"A2G2","descriptor":"A2G2","dim_m0":22,"component_group_order":1,"chars":"any","citation":"low-rank maximal table, E6: A2G2"},

    {"ambient":"F4","kind":"subsystem","label":"B4","descriptor":"B4","dim_m0":36,"component_group_order":1,"chars":"any","citation":"maximal-rank table, F4: B4"},
    {"ambient":"F4","kind":"subsystem","label":"C4","descriptor":"C4","dim_m0":36,"component_group_order":1,"chars":"p=2","citation":"maximal-rank table, F4 (p=2): C4"},
    {"ambient":"F4","kind":"subsystem","label":"D4","descriptor":"D4","dim_m0":28,"component_group_order":6,"chars":"any","citation":"maximal-rank table, F4: D4 (S3)"},
    {"ambient":"F4","kind":"subsystem","label":"~D4","descriptor":"~D4","dim_m0":28,"component_group_order":6,"chars":"p=2","citation":"maximal-rank table, F4 (p=2): short-root D4 (S3)"},
    {"ambient":"F4","kind":"subsystem","label":"A1C3","descriptor":"A1C3","dim_m0":24,"component_group_order":1,"chars":"p!=2","citation":"maximal-rank table, F4 (p!=2): A1C3"},
    {"ambient":"F4","kind":"subsystem","label":"A2~A2","descriptor":"A2~A2","dim_m0":16,"component_group_order":2,"chars":"any","citation":"maximal-rank table, F4: A2 x short-root A2 (Z2)"},
    {"ambient":"F4","kind":"curated","label":"A1","descriptor":"A1","dim_m0":3,"component_group_order":1,"chars":"p>=13","citation":"low-rank maximal table, F4: A1 (p>=13)"},
    {"ambient":"F4","kind":"curated","label":"G2","descriptor":"G2","dim_m0":14,"component_group_order":1,"chars":"p=7","citation":"low-rank maximal table, F4: G2 (p=7)"},
    {"ambient":"F4","kind":"curated","label":"A1G2","descriptor":"A1G2","dim_m0":17,"component_group_order":1,"chars":"p!=2","citation":"low-rank maximal table, F4: A1G2 (p!=2)"},

    {"ambient":"G2","kind":"subsystem","label":"A1~A1","descriptor":"A1~A1","dim_m0":6,"component_group_order":1,"chars":"any","citation":"maximal-rank table, G2: A1 x short-root A1"},
    {"ambient":"G2","kind":"subsystem","label":"A2","descriptor":"A2","dim_m0":8,"component_group_order":2,"chars":"any","citation":"maximal-rank table, G2: A2 (Z2)"},
    {"ambient":"G2","kind":"subsystem","label":"~A2","descriptor":"~A2","dim_m0":8,"component_group_order":2,"chars":"p=3","citation":"maximal-rank table, G2 (p=3): short-root A2 (Z2)"},
    {"ambient":"G2","kind":"curated","label":"A1","descriptor":"A1","dim_m0":3,"component_group_order":1,"chars":"p>=7","citation":"low-rank maximal table, G2: A1 (p>=7)"},

    {"ambient":"D4","kind":"curated","label":"A3T1","descriptor":"A3T1","dim_m0":16,"component_group_order":2,"chars":"any","citation":"triality-group maximal list: A3T1 (Z2)"},
    {"ambient":"D4","kind":"curated","label":"A1^4","descriptor":"A1^4","dim_m0":12,"component_group_order":1,"chars":"any","citation":"triality-group maximal list: A1^4 (component group not tracked)"},
    {"ambient":"D4","kind":"curated","label":"T4","descriptor":"T4","dim_m0":4,"component_group_order":192,"chars":"any","citation":"triality-group maximal list: T4 (Weyl group, torus-normalizer convention)"},
    {"ambient":"D4","kind":"curated","label":"B3","descriptor":"B3","dim_m0":21,"component_group_order":1,"chars":"p!=2","citation":"triality-group maximal list: B3 (p!=2)"},
    {"ambient":"D4","kind":"curated","label":"C3","descriptor":"C3","dim_m0":21,"component_group_order":1,"chars":"p=2","citation":"triality-group maximal list: C3 (p=2)"},
    {"ambient":"D4","kind":"curated","label":"A1B2","descriptor":"A1B2","dim_m0":13,"component_group_order":1,"chars":"p!=2","citation":"triality-group maximal list: A1B2 (p!=2; component group not tracked)"},
    {"ambient":"D4","kind":"curated","label":"A1C2","descriptor":"A1C2","dim_m0":13,"component_group_order":1,"chars":"any","citation":"triality-group maximal list: A1C2 (component group not tracked)"},
    {"ambient":"D4","kind":"curated","label":"A2","descriptor":"A2","dim_m0":8,"component_group_order":1,"chars":"p!=3","citation":"triality-group maximal list: A2 via the adjoint representation (p!=3)"},

    {"ambient":"B2","kind":"curated","label":"A1^2","descriptor":"A1^2","dim_m0":6,"component_group_order":2,"chars":"any","citation":"rank-2 symplectic maximal list: A1^2 (factors swapped by the normalizer)"}
  ],
  "class_dims": [
    {"ambient":"E8","label":"A_1","nature":"unipotent","dim":58,"chars":"any","citation":"class dimensions: E8 long root element"},
    {"ambient":"E8","label":"A_1^2","nature":"unipotent","dim":92,"chars":"any","citation":"class dimensions: E8 class A_1^2"},
    {"ambient":"E8","label":"A_1^3","nature":"unipotent","dim":112,"chars":"any","citation":"class dimensions: E8 class A_1^3"},
    {"ambient":"E8","label":"A_1^4","nature":"unipotent","dim":128,"chars":"p=2","citation":"class dimensions: E8 class A_1^4 (p=2)"},
    {"ambient":"E8","label":"A_2^2A_1^2","nature":"unipotent","dim":168,"chars":"p=3","citation":"torsion witness table: E8, r=p=3"},
    {"ambient":"E8","label":"D8","nature":"semisimple","dim":128,"chars":"p!=2","citation":"torsion witness table: E8, r=2, centralizer D8"},
    {"ambient":"E8","label":"A8","nature":"semisimple","dim":168,"chars":"p!=3","citation":"torsion witness table: E8, r=3, centralizer A8"},
    {"ambient":"E8","label":"A4^2","nature":"semisimple","dim":200,"chars":"p!=5","citation":"class dimensions: E8 order-5 element with centralizer A4^2"},
    {"ambient":"E8","label":"E7T1","nature":"semisimple","dim":114,"chars":"any","citation":"class dimensions: E8 semisimple element with centralizer E7T1"},
    {"ambient":"E8","label":"A1E7","nature":"semisimple","dim":112,"chars":"p!=2","citation":"class dimensions: E8 involution with centralizer A1E7"},

    {"ambient":"E7","label":"A_1","nature":"unipotent","dim":34,"chars":"any","citation":"class dimensions: E7 long root element"},
    {"ambient":"E7","label":"A_1^2","nature":"unipotent","dim":52,"chars":"any","citation":"class dimensions: E7 class A_1^2"},
    {"ambient":"E7","label":"(A_1^3)(2)","nature":"unipotent","dim":54,"chars":"any","citation":"class dimensions: E7 class (A_1^3)(2)"},
    {"ambient":"E7","label":"A_1^4","nature":"unipotent","dim":70,"chars":"p=2","citation":"torsion witness table: E7, r=p=2"},
    {"ambient":"E7","label":"A_2^2A_1","nature":"unipotent","dim":90,"chars":"p=3","citation":"torsion witness table: E7, r=p=3"},
    {"ambient":"E7","label":"A7","nature":"semisimple","dim":70,"chars":"p!=2","citation":"torsion witness table: E7, r=2, centralizer A7 (lifts have order 4)"},
    {"ambient":"E7","label":"A2A5","nature":"semisimple","dim":90,"chars":"p!=3","citation":"torsion witness table: E7, r=3, centralizer A2A5"},
    {"ambient":"E7","label":"E6T1","nature":"semisimple","dim":54,"chars":"p!=2","citation":"class dimensions: E7 element with centralizer E6T1"},

    {"ambient":"E6","label":"A_1","nature":"unipotent","dim":22,"chars":"any","citation":"class dimensions: E6 long root element"},
    {"ambient":"E6","label":"A_1^3","nature":"unipotent","dim":40,"chars":"p=2","citation":"torsion witness table: E6, r=p=2"},
    {"ambient":"E6","label":"A_2^2A_1","nature":"unipotent","dim":54,"chars":"p=3","citation":"torsion witness table: E6, r=p=3"},
    {"ambient":"E6","label":"A1A5","nature":"semisimple","dim":40,"chars":"p!=2","citation":"torsion witness table: E6, r=2, centralizer A1A5"},
    {"ambient":"E6","label":"A2^3","nature":"semisimple","dim":54,"chars":"p!=3","citation":"torsion witness table: E6, r=3, centralizer A2^3"},
    {"ambient":"E6","label":"D5T1","nature":"semisimple","dim":32,"chars":"any","citation":"class dimensions: E6 element with centralizer D5T1"},

    {"ambient":"F4","label":"A_1","nature":"unipotent","dim":16,"chars":"any","citation":"class dimensions: F4 long root element"},
    {"ambient":"F4","label":"~A_1","nature":"unipotent","dim":22,"dim_delta_prime":2,"dim_delta_coeff":-6,"chars":"any","citation":"class dimensions: F4 short root element (dim 16 when p=2)"},
    {"ambient":"F4","label":"A_1~A_1","nature":"unipotent","dim":28,"chars":"p=2","citation":"torsion witness table: F4, r=p=2"},
    {"ambient":"F4","label":"~A_2A_1","nature":"unipotent","dim":36,"chars":"p=3","citation":"torsion witness table: F4, r=p=3"},
    {"ambient":"F4","label":"t","nature":"semisimple","dim":16,"chars":"p!=2","citation":"class dimensions: F4 involution with centralizer B4"},
    {"ambient":"F4","label":"A1C3","nature":"semisimple","dim":28,"chars":"p!=2","citation":"torsion witness table: F4, r=2, centralizer A1C3"},
    {"ambient":"F4","label":"A2~A2","nature":"semisimple","dim":36,"chars":"p!=3","citation":"torsion witness table: F4, r=3, centralizer A2 x short-root A2"},

    {"ambient":"G2","label":"A_1","nature":"unipotent","dim":6,"chars":"any","citation":"class dimensions: G2 long root element"},
    {"ambient":"G2","label":"~A_1","nature":"unipotent","dim":8,"dim_delta_prime":3,"dim_delta_coeff":-2,"chars":"any","citation":"class dimensions: G2 short root element (dim 6 when p=3)"},
    {"ambient":"G2","label":"G2(a1)","nature":"unipotent","dim":10,"chars":"any","citation":"class dimensions: G2 class G2(a1)"},
    {"ambient":"G2","label":"A1~A1","nature":"semisimple","dim":8,"chars":"p!=2","citation":"torsion witness table: G2, r=2, centralizer A1 x short-root A1"},
    {"ambient":"G2","label":"~A1T1","nature":"semisimple","dim":10,"chars":"p!=3","citation":"torsion witness table: G2, r=3, centralizer short-root A1 x T1"},

    {"ambient":"D4","label":"A1^4","nature":"semisimple","dim":16,"chars":"p!=2","citation":"torsion witness table: D4, r=2, centralizer A1^4"},
    {"ambient":"D4","label":"c4","nature":"unipotent","dim":16,"chars":"p=2","citation":"torsion witness table: D4, r=p=2, class c4"},
    {"ambient":"D4","label":"A1^3T1","nature":"semisimple","dim":18,"chars":"p!=3","citation":"torsion witness table: D4, r=3, centralizer A1^3T1"},
    {"ambient":"D4","label":"A2T2","nature":"semisimple","dim":18,"chars":"p!=3","citation":"torsion witness table: D4, r=3, centralizer A2T2"},
    {"ambient":"D4","label":"[J3^2,J1^2]","nature":"unipotent","dim":18,"chars":"p=3","citation":"torsion witness table: D4, r=p=3, Jordan form [J3^2,J1^2]"},

    {"ambient":"B2","label":"A1T1","nature":"semisimple","dim":6,"chars":"p!=3","citation":"torsion witness table: B2, r=3, centralizer A1T1"},
    {"ambient":"B2","label":"c2","nature":"unipotent","dim":6,"chars":"p=2","citation":"torsion witness table: B2, r=p=2, class c2"}
  ],
  "alphas": [
    {"ambient":"E8","subgroup":"P1","class":"u_alpha","num":10,"den":13,"chars":"any","citation":"alpha table (parabolic, long root), E8 P1"},
    {"ambient":"E8","subgroup":"P2","class":"u_alpha","num":35,"den":46,"chars":"any","citation":"alpha table (parabolic, long root), E8 P2"},
    {"ambient":"E8","subgroup":"P3","class":"u_alpha","num":75,"den":98,"chars":"any","citation":"alpha table (parabolic, long root), E8 P3"},
    {"ambient":"E8","subgroup":"P4","class":"u_alpha","num":81,"den":106,"chars":"any","citation":"alpha table (parabolic, long root), E8 P4"},
    {"ambient":"E8","subgroup":"P5","class":"u_alpha","num":79,"den":104,"chars":"any","citation":"alpha table (parabolic, long root), E8 P5"},
    {"ambient":"E8","subgroup":"P6","class":"u_alpha","num":75,"den":97,"chars":"any","citation":"alpha table (parabolic, long root), E8 P6"},
    {"ambient":"E8","subgroup":"P7","class":"u_alpha","num":65,"den":83,"chars":"any","citation":"alpha table (parabolic, long root), E8 P7"},
    {"ambient":"E8","subgroup":"P8","class":"u_alpha","num":15,"den":19,"chars":"any","citation":"alpha table (parabolic, long root), E8 P8"},
    {"ambient":"E7","subgroup":"P1","class":"u_alpha","num":25,"den":33,"chars":"any","citation":"alpha table (parabolic, long root), E7 P1"},
    {"ambient":"E7","subgroup":"P2","class":"u_alpha","num":31,"den":42,"chars":"any","citation":"alpha table (parabolic, long root), E7 P2"},
    {"ambient":"E7","subgroup":"P3","class":"u_alpha","num":35,"den":47,"chars":"any","citation":"alpha table (parabolic, long root), E7 P3"},
    {"ambient":"E7","subgroup":"P4","class":"u_alpha","num":39,"den":53,"chars":"any","citation":"alpha table (parabolic, long root), E7 P4"},
    {"ambient":"E7","subgroup":"P5","class":"u_alpha","num":37,"den":50,"chars":"any","citation":"alpha table (parabolic, long root), E7 P5"},
    {"ambient":"E7","subgroup":"P6","class":"u_alpha","num":16,"den":21,"chars":"any","citation":"alpha table (parabolic, long root), E7 P6"},
    {"ambient":"E7","subgroup":"P7","class":"u_alpha","num":7,"den":9,"chars":"any","citation":"alpha table (parabolic, long root), E7 P7"},
    {"ambient":"E6","subgroup":"P1","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (parabolic, long root), E6 P1"},
    {"ambient":"E6","subgroup":"P2","class":"u_alpha","num":5,"den":7,"chars":"any","citation":"alpha table (parabolic, long root), E6 P2"},
    {"ambient":"E6","subgroup":"P3","class":"u_alpha","num":18,"den":25,"chars":"any","citation":"alpha table (parabolic, long root), E6 P3"},
    {"ambient":"E6","subgroup":"P4","class":"u_alpha","num":20,"den":29,"chars":"any","citation":"alpha table (parabolic, long root), E6 P4"},
    {"ambient":"E6","subgroup":"P5","class":"u_alpha","num":18,"den":25,"chars":"any","citation":"alpha table (parabolic, long root), E6 P5"},
    {"ambient":"E6","subgroup":"P6","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (parabolic, long root), E6 P6"},
    {"ambient":"F4","subgroup":"P1","class":"u_alpha","num":2,"den":3,"chars":"any","citation":"alpha table (parabolic, long root), F4 P1"},
    {"ambient":"F4","subgroup":"P2","class":"u_alpha","num":13,"den":20,"chars":"any","citation":"alpha table (parabolic, long root), F4 P2"},
    {"ambient":"F4","subgroup":"P3","class":"u_alpha","num":7,"den":10,"chars":"any","citation":"alpha table (parabolic, long root), F4 P3"},
    {"ambient":"F4","subgroup":"P4","class":"u_alpha","num":11,"den":15,"chars":"any","citation":"alpha table (parabolic, long root), F4 P4"},
    {"ambient":"G2","subgroup":"P1","class":"u_alpha","num":2,"den":5,"chars":"any","citation":"alpha table (parabolic, long root), G2 P1"},
    {"ambient":"G2","subgroup":"P2","class":"u_alpha","num":3,"den":5,"chars":"any","citation":"alpha table (parabolic, long root), G2 P2"},

    {"ambient":"F4","subgroup":"P1","class":"u_beta","num":9,"num_delta_prime":2,"num_delta_coeff":2,"den":15,"chars":"any","citation":"alpha table (parabolic, short root), F4 P1: (9+2d_{2,p})/15"},
    {"ambient":"F4","subgroup":"P2","class":"u_beta","num":11,"num_delta_prime":2,"num_delta_coeff":3,"den":20,"chars":"any","citation":"alpha table (parabolic, short root), F4 P2: (11+3d_{2,p})/20"},
    {"ambient":"F4","subgroup":"P3","class":"u_beta","num":11,"num_delta_prime":2,"num_delta_coeff":2,"den":20,"chars":"any","citation":"alpha table (parabolic, short root), F4 P3: (11+2d_{2,p})/20"},
    {"ambient":"F4","subgroup":"P4","class":"u_beta","num":9,"num_delta_prime":2,"num_delta_coeff":1,"den":15,"chars":"any","citation":"alpha table (parabolic, short root), F4 P4: (9+d_{2,p})/15"},
    {"ambient":"G2","subgroup":"P1","class":"u_beta","num":2,"num_delta_prime":3,"num_delta_coeff":1,"den":5,"chars":"any","citation":"alpha table (parabolic, short root), G2 P1: (2+d_{3,p})/5"},
    {"ambient":"G2","subgroup":"P2","class":"u_beta","num":2,"den":5,"chars":"any","citation":"alpha table (parabolic, short root), G2 P2"},

    {"ambient":"F4","subgroup":"P1","class":"t","num":11,"den":15,"chars":"p!=2","citation":"alpha values (B4-involution under parabolics), F4 P1"},
    {"ambient":"F4","subgroup":"P2","class":"t","num":7,"den":10,"chars":"p!=2","citation":"alpha values (B4-involution under parabolics), F4 P2"},
    {"ambient":"F4","subgroup":"P4","class":"t","num":2,"den":3,"chars":"p!=2","citation":"alpha values (B4-involution under parabolics), F4 P4"},

    {"ambient":"E8","subgroup":"A1E7","class":"u_alpha","num":11,"den":14,"chars":"any","citation":"alpha table (maximal rank), E8 A1E7"},
    {"ambient":"E8","subgroup":"A2E6","class":"u_alpha","num":7,"den":9,"chars":"any","citation":"alpha table (maximal rank), E8 A2E6"},
    {"ambient":"E8","subgroup":"D4^2","class":"u_alpha","num":37,"den":48,"chars":"p=2","citation":"alpha table (maximal rank), E8 D4^2 (p=2)"},
    {"ambient":"E8","subgroup":"D4^2","class":"u_alpha","num":3,"den":4,"chars":"p!=2","citation":"alpha table (maximal rank), E8 D4^2 (p!=2)"},
    {"ambient":"E8","subgroup":"T8","class":"u_alpha","num":61,"den":80,"chars":"p=2","citation":"alpha table (maximal rank), E8 T8 (p=2)"},
    {"ambient":"E8","subgroup":"D8","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), E8 D8"},
    {"ambient":"E8","subgroup":"A8","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), E8 A8"},
    {"ambient":"E8","subgroup":"A4^2","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), E8 A4^2"},
    {"ambient":"E8","subgroup":"A2^4","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), E8 A2^4"},
    {"ambient":"E8","subgroup":"A1^8","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), E8 A1^8"},
    {"ambient":"E7","subgroup":"E6T1","class":"u_alpha","num":7,"den":9,"chars":"any","citation":"alpha table (maximal rank), E7 E6T1"},
    {"ambient":"E7","subgroup":"A1D6","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), E7 A1D6"},
    {"ambient":"E7","subgroup":"A1^3D4","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), E7 A1^3D4"},
    {"ambient":"E7","subgroup":"T7","class":"u_alpha","num":31,"den":42,"chars":"p=2","citation":"alpha table (maximal rank), E7 T7 (p=2)"},
    {"ambient":"E7","subgroup":"A2A5","class":"u_alpha","num":11,"den":15,"chars":"any","citation":"alpha table (maximal rank), E7 A2A5"},
    {"ambient":"E7","subgroup":"A7","class":"u_alpha","num":5,"den":7,"chars":"any","citation":"alpha table (maximal rank), E7 A7"},
    {"ambient":"E7","subgroup":"A1^7","class":"u_alpha","num":5,"den":7,"chars":"any","citation":"alpha table (maximal rank), E7 A1^7"},
    {"ambient":"E6","subgroup":"D4T2","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), E6 D4T2"},
    {"ambient":"E6","subgroup":"T6","class":"u_alpha","num":17,"den":24,"chars":"p=2","citation":"alpha table (maximal rank), E6 T6 (p=2)"},
    {"ambient":"E6","subgroup":"A1A5","class":"u_alpha","num":7,"den":10,"chars":"any","citation":"alpha table (maximal rank), E6 A1A5"},
    {"ambient":"E6","subgroup":"A2^3","class":"u_alpha","num":2,"den":3,"chars":"any","citation":"alpha table (maximal rank), E6 A2^3"},
    {"ambient":"F4","subgroup":"B4","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), F4 B4"},
    {"ambient":"F4","subgroup":"D4","class":"u_alpha","num":3,"den":4,"chars":"any","citation":"alpha table (maximal rank), F4 D4"},
    {"ambient":"F4","subgroup":"C4","class":"u_beta","num":3,"den":4,"chars":"p=2","citation":"alpha table (maximal rank), F4 C4 (p=2), short root"},
    {"ambient":"F4","subgroup":"~D4","class":"u_beta","num":3,"den":4,"chars":"p=2","citation":"alpha table (maximal rank), F4 short-root D4 (p=2), short root"},
    {"ambient":"F4","subgroup":"A1C3","class":"t","num":5,"den":7,"chars":"p!=2","citation":"alpha table (maximal rank), F4 A1C3, B4-involution"},
    {"ambient":"F4","subgroup":"A2~A2","class":"u_alpha","num":2,"den":3,"chars":"any","citation":"alpha table (maximal rank), F4 A2 x short-root A2, long root"},
    {"ambient":"F4","subgroup":"A2~A2","class":"t","num":2,"den":3,"chars":"p!=2","citation":"alpha table (maximal rank), F4 A2 x short-root A2, B4-involution"},
    {"ambient":"F4","subgroup":"A2~A2","class":"u_beta","num":2,"den":3,"chars":"p=2","citation":"alpha table (maximal rank), F4 A2 x short-root A2 (p=2), short root"},
    {"ambient":"G2","subgroup":"A2","class":"u_alpha","num":2,"den":3,"chars":"any","citation":"alpha table (maximal rank), G2 A2"},
    {"ambient":"G2","subgroup":"~A2","class":"u_beta","num":2,"den":3,"chars":"p=3","citation":"alpha table (maximal rank), G2 short-root A2 (p=3), short root"},

    {"ambient":"E8","subgroup":"G2F4","class":"u_alpha","num":10,"den":13,"chars":"any","citation":"alpha table (low rank), E8 G2F4"},
    {"ambient":"E8","subgroup":"A1G2^2","class":"u_alpha","num":165,"den":217,"chars":"p!=2","citation":"alpha table (low rank), E8 A1G2^2 (p!=2)"},
    {"ambient":"E7","subgroup":"A1F4","class":"u_alpha","num":10,"den":13,"chars":"any","citation":"alpha table (low rank), E7 A1F4"},
    {"ambient":"E7","subgroup":"G2C3","class":"u_alpha","num":5,"den":7,"chars":"any","citation":"alpha table (low rank), E7 G2C3"},
    {"ambient":"E6","subgroup":"F4","class":"u_alpha","num":10,"den":13,"chars":"any","citation":"alpha table (low rank), E6 F4"},
    {"ambient":"E6","subgroup":"A2G2","class":"u_alpha","num":5,"den":7,"chars":"any","citation":"alpha table (low rank), E6 A2G2"},
    {"ambient":"E6","subgroup":"C4","class":"u_alpha","num":2,"den":3,"chars":"p!=2","citation":"alpha table (low rank), E6 C4 (p!=2)"},
    {"ambient":"F4","subgroup":"A1G2","class":"u_alpha","num":5,"den":7,"chars":"p!=2","citation":"alpha table (low rank), F4 A1G2 (p!=2)"},

    {"ambient":"F4","subgroup":"A1G2","class":"t","num":3,"den":5,"chars":"p!=2","citation":"alpha values (in-proof), F4 A1G2, B4-involution"},
    {"ambient":"E7","subgroup":"A1G2","class":"A_1^2","num":35,"den":58,"chars":"p!=2","citation":"alpha values (in-proof), E7 A1G2, class A_1^2"},
    {"ambient":"E7","subgroup":"(2^2xD4).S3","class":"A_1^2","num":3,"den":5,"chars":"p!=2","citation":"alpha values (in-proof), E7 (2^2xD4).S3, class A_1^2"}
  ],
  "module_fixed_points": [
    {"ambient":"G2","module":"weyl-7","dim_module":7,"dim_fixed":5,"fixed_is_lower_bound":false,"citation":"fixed-space data: 7-dimensional Weyl module, long root element"},
    {"ambient":"F4","module":"weyl-26","dim_module":26,"dim_module_delta_prime":3,"dim_module_delta_coeff":-1,"dim_fixed":20,"dim_fixed_delta_prime":3,"dim_fixed_delta_coeff":-1,"fixed_is_lower_bound":true,"citation":"fixed-space data: 26-dimensional module (25 when p=3), long root element"},
    {"ambient":"E6","module":"minimal-27","dim_module":27,"dim_fixed":21,"fixed_is_lower_bound":false,"citation":"fixed-space data: minimal 27-dimensional module, long root element"},
    {"ambient":"E7","module":"minimal-56","dim_module":56,"dim_fixed":44,"fixed_is_lower_bound":false,"citation":"fixed-space data: minimal 56-dimensional module, long root element"},
    {"ambient":"E8","module":"adjoint-248","dim_module":248,"dim_fixed":190,"fixed_is_lower_bound":false,"citation":"fixed-space data: adjoint module, derived as 248 - 58 from the long-root class dimension"}
  ],
  "refinements": [
    {"ambient":"E6","subgroup":"P2","centralizer":"A2^3","bound":8,"citation":"semisimple parabolic bounds: the A2^3 centralizer keeps a root subgroup outside the unipotent radical, improving the 9-positive-roots bound to 8"}
  ],
  "torsion_dims": [
    {"group":"E8","r":2,"dim":128},
    {"group":"E8","r":3,"dim":168},
    {"group":"E8","r":5,"dim":200},
    {"group":"E8","r":7,"dim":212},
    {"group":"E8","r":11,"dim":224},
    {"group":"E8","r":13,"dim":228},
    {"group":"E8","r":17,"dim":232},
    {"group":"E8","r":19,"dim":234},
    {"group":"E8","r":23,"dim":236},
    {"group":"E8","r":29,"dim":238},
    {"group":"E7","r":2,"dim":70},
    {"group":"E7","r":3,"dim":90},
    {"group":"E7","r":5,"dim":106},
    {"group":"E7","r":7,"dim":114},
    {"group":"E7","r":11,"dim":120},
    {"group":"E7","r":13,"dim":122},
    {"group":"E7","r":17,"dim":124},
    {"group":"E6","r":2,"dim":40},
    {"group":"E6","r":3,"dim":54},
    {"group":"E6","r":5,"dim":62},
    {"group":"E6","r":7,"dim":66},
    {"group":"E6","r":11,"dim":70},
    {"group":"F4","r":2,"dim":28},
    {"group":"F4","r":3,"dim":36},
    {"group":"F4","r":5,"dim":40},
    {"group":"F4","r":7,"dim":44},
    {"group":"F4","r":11,"dim":46},
    {"group":"G2","r":2,"dim":8},
    {"group":"G2","r":3,"dim":10},
    {"group":"G2","r":5,"dim":10},
    {"group":"D4","r":2,"dim":16},
    {"group":"D4","r":3,"dim":18},
    {"group":"D4","r":5,"dim":22},
    {"group":"B2","r":2,"dim":6},
    {"group":"B2","r":3,"dim":6}
  ],
  "ell": [
    {"group":"E8","value":200},
    {"group":"E7","value":100},
    {"group":"E6","value":58},
    {"group":"F4","value":40},
    {"group":"G2","value":10},
    {"group":"D4","value":24,"delta5_coeff":-2},
    {"group":"B2","value":8}
  ]
}
)JSON";

}  // namespace

const nlohmann::json& curated() {
  static const nlohmann::json doc = nlohmann::json::parse(kCuratedJson);
  return doc;
}

std::string canonical_dump() {
  return curated().dump(2) + "\n";
}

}  // namespace exg::data

namespace exg {

std::string curated_tables_dump() { return data::canonical_dump(); }

}  // namespace exg
