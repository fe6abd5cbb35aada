#ifndef POLLING_PARAMS_HPP
#define POLLING_PARAMS_HPP

#include <stdexcept>
#include <string>

namespace polling {

/// Coordination discipline for the station-2 server.
/// SP: station 2 works on the same product type as station 1.
/// OP: station 2 works on the opposite product type.
enum class Strategy { SP, OP };

/// Station-1 server phase. S1/S2: setting up for type 1/2, U1/U2: serving
/// type 1/2. Station 2's activity is fully determined by this phase plus
/// the strategy, so no separate phase is tracked for it.
/// The numeric order S1 < S2 < U1 < U2 fixes the state enumeration order.
enum class Phase : int { S1 = 0, S2 = 1, U1 = 2, U2 = 3 };

inline const char* to_string(Strategy s) { return s == Strategy::SP ? "sp" : "op"; }

inline const char* to_string(Phase r) {
  switch (r) {
    case Phase::S1: return "S1";
    case Phase::S2: return "S2";
    case Phase::U1: return "U1";
    default: return "U2";
  }
}

inline bool is_setup(Phase r) { return r == Phase::S1 || r == Phase::S2; }
inline bool is_serving(Phase r) { return r == Phase::U1 || r == Phase::U2; }

/// Product the server is occupied with in a given phase (1 or 2).
inline int phase_product(Phase r) {
  return (r == Phase::S1 || r == Phase::U1) ? 1 : 2;
}

inline Phase setup_phase(int product) { return product == 1 ? Phase::S1 : Phase::S2; }
inline Phase serving_phase(int product) { return product == 1 ? Phase::U1 : Phase::U2; }

/// Phase with the product labels 1 and 2 exchanged.
inline Phase swap_phase(Phase r) {
  switch (r) {
    case Phase::S1: return Phase::S2;
    case Phase::S2: return Phase::S1;
    case Phase::U1: return Phase::U2;
    default: return Phase::U1;
  }
}

/// All rates and buffer capacities of the two-station, two-product tandem
/// polling network. Buffer cap n_i applies to the type-i queue at each
/// station independently (a full queue drops further entrants).
struct NetworkParams {
  double lambda1 = 0.0;  ///< type-1 arrival rate at station 1
  double lambda2 = 0.0;  ///< type-2 arrival rate at station 1
  double mu11 = 0.0;     ///< type-1 service rate at station 1
  double mu21 = 0.0;     ///< type-2 service rate at station 1
  double mu12 = 0.0;     ///< type-1 service rate at station 2
  double mu22 = 0.0;     ///< type-2 service rate at station 2
  double mus1 = 0.0;     ///< setup-completion rate when switching to type 1
  double mus2 = 0.0;     ///< setup-completion rate when switching to type 2
  int n1 = 0;            ///< max type-1 queue length per station (incl. in service)
  int n2 = 0;            ///< max type-2 queue length per station (incl. in service)

  /// Throws std::invalid_argument naming the offending field. Service and
  /// setup rates must be strictly positive; arrival rates may be zero
  /// (a closed-off product type); caps must be at least 1.
  void validate() const {
    auto bad = [](const std::string& field, const std::string& why) {
      throw std::invalid_argument("NetworkParams." + field + " " + why);
    };
    if (!(lambda1 >= 0.0)) bad("lambda1", "must be >= 0");
    if (!(lambda2 >= 0.0)) bad("lambda2", "must be >= 0");
    if (!(mu11 > 0.0)) bad("mu11", "must be > 0");
    if (!(mu21 > 0.0)) bad("mu21", "must be > 0");
    if (!(mu12 > 0.0)) bad("mu12", "must be > 0");
    if (!(mu22 > 0.0)) bad("mu22", "must be > 0");
    if (!(mus1 > 0.0)) bad("mus1", "must be > 0");
    if (!(mus2 > 0.0)) bad("mus2", "must be > 0");
    if (n1 < 1) bad("n1", "must be >= 1");
    if (n2 < 1) bad("n2", "must be >= 1");
  }

  double lambda(int product) const { return product == 1 ? lambda1 : lambda2; }
  double service1(int product) const { return product == 1 ? mu11 : mu21; }
  double service2(int product) const { return product == 1 ? mu12 : mu22; }
  double setup(int product) const { return product == 1 ? mus1 : mus2; }
  int cap(int product) const { return product == 1 ? n1 : n2; }

  /// Offered load at station j under infinite buffers; advisory only
  /// (finite-buffer chains are always stable).
  double rho(int station) const {
    return station == 1 ? lambda1 / mu11 + lambda2 / mu21
                        : lambda1 / mu12 + lambda2 / mu22;
  }

  /// Parameters with the product labels 1 and 2 exchanged.
  NetworkParams swapped() const {
    NetworkParams s;
    s.lambda1 = lambda2;
    s.lambda2 = lambda1;
    s.mu11 = mu21;
    s.mu21 = mu11;
    s.mu12 = mu22;
    s.mu22 = mu12;
    s.mus1 = mus2;
    s.mus2 = mus1;
    s.n1 = n2;
    s.n2 = n1;
    return s;
  }
};

inline void require_product(int product) {
  if (product != 1 && product != 2)
    throw std::invalid_argument("product index must be 1 or 2");
}

}  // namespace polling

#endif
