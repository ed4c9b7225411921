#include "sphcode/refdata.hpp"

#include <stdexcept>

namespace sphcode {

std::string to_string(RefStatus s) {
  switch (s) {
    case RefStatus::proved:
      return "proved";
    case RefStatus::conjectured:
      return "conjectured";
    case RefStatus::numerical_bound:
      return "numerical-bound";
  }
  return "unknown";
}

const std::vector<ReferenceEntry>& reference_table() {
  static const std::vector<ReferenceEntry> table{
      {"kissing_1", 2, RefStatus::proved, "elementary"},
      {"kissing_2", 6, RefStatus::proved, "elementary"},
      {"kissing_3", 12, RefStatus::proved, "Schutte & van der Waerden 1953"},
      {"kissing_4", 24, RefStatus::proved, "Musin 2008, Ann. of Math. 168"},
      {"kissing_8", 240, RefStatus::proved,
       "Levenshtein 1979; Odlyzko & Sloane 1979"},
      {"kissing_24", 196560, RefStatus::proved,
       "Levenshtein 1979; Odlyzko & Sloane 1979"},
      {"density_dim4_conjecture", 0.61685027506808491368, RefStatus::conjectured,
       "pi^2/16, attained by the D4 lattice; optimal among lattices by "
       "Korkine & Zolotareff 1872"},
      {"center_density_dim4_conjecture", 0.125, RefStatus::conjectured,
       "D4 lattice; optimal among lattices by Korkine & Zolotareff 1872"},
      {"center_density_dim4_upper", 0.130587, RefStatus::numerical_bound,
       "de Laat, de Oliveira Filho & Vallentin 2014"},
      {"center_density_dim4_upper_cohn_elkies", 0.13126, RefStatus::numerical_bound,
       "Cohn & Elkies 2003"},
      {"lp_bound_dim4", 25.558, RefStatus::numerical_bound,
       "Odlyzko & Sloane 1979"},
      {"lp_musin_bound_dim4", 24.865, RefStatus::numerical_bound, "Musin 2008"},
      {"sdp_bound_s7_dim4", 24.5797, RefStatus::numerical_bound,
       "Bachoc & Vallentin 2008"},
      {"sdp_bound_s11_dim4", 24.10550859, RefStatus::numerical_bound,
       "Mittelmann & Vallentin 2010"},
      {"sdp_bound_s12_dim4", 24.09098111, RefStatus::numerical_bound,
       "Mittelmann & Vallentin 2010"},
      {"sdp_bound_s13_dim4", 24.07519774, RefStatus::numerical_bound,
       "Mittelmann & Vallentin 2010"},
      {"sdp_bound_s14_dim4", 24.06628391, RefStatus::numerical_bound,
       "Mittelmann & Vallentin 2010"},
      {"sdp_bound_s15_dim4", 24.062758, RefStatus::numerical_bound,
       "Machado & de Oliveira Filho 2016"},
      {"sdp_bound_s16_dim4", 24.056903, RefStatus::numerical_bound,
       "Machado & de Oliveira Filho 2016"},
      {"spherical_kissing_1", 2, RefStatus::proved, "classical small cases"},
      {"spherical_kissing_2", 5, RefStatus::proved, "classical small cases"},
      {"spherical_kissing_3", 12, RefStatus::proved, "classical small cases"},
      {"spherical_kissing_4", 22, RefStatus::conjectured, "open conjecture"},
      {"two_distance_max_dim4", 10, RefStatus::proved,
       "Lisonek 1997, J. Combin. Theory Ser. A 77"},
  };
  return table;
}

const ReferenceEntry& ref_lookup(const std::string& key) {
  for (const ReferenceEntry& e : reference_table())
    if (e.key == key) return e;
  throw std::out_of_range("ref_lookup: unknown key '" + key + "'");
}

}  // namespace sphcode
