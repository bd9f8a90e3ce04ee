#include "ncd/presentations.hpp"

namespace ncd {

ReductionSystem<Cyclotomic> build_quantum_plane(int n)
{
	if (n < 2)
		throw std::invalid_argument("quantum plane needs n >= 2");
	const AlphabetPtr& alpha = ax_alphabet();
	const Letter a = 0, x = 1;
	MonomialOrder order = MonomialOrder::deglex(alpha, {x, a});
	Rule<Cyclotomic> rule{Word{x, a}, NcPoly<Cyclotomic>::monomial(alpha, Word{a, x}, Cyclotomic::generator(n)), "xa"};
	return ReductionSystem<Cyclotomic>(order, {rule}, "quantum plane q^" + std::to_string(n) + " = 1");
}

const AlphabetPtr& abxy_alphabet()
{
	static const AlphabetPtr alphabet = make_alphabet({"a", "x", "b", "y"});
	return alphabet;
}

} // namespace ncd
