#include "mfil/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace mfil {

Integer binomial(long a, long b)
{
	if (a < 0 || b < 0 || b > a)
		return 0;
	Integer r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
	return r;
}

Integer factorial(long n)
{
	if (n < 0)
		throw std::invalid_argument("factorial of a negative number");
	Integer r;
	mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
	return r;
}

std::int64_t partitions_exact(int q, long k)
{
	if (q < 1)
		throw std::invalid_argument("partitions_exact: q must be >= 1");
	if (k < q)
		return 0;
	// table[p][m] = P_p(m); P_p(m) = P_p(m - p) + P_{p-1}(m - 1)
	std::vector<std::vector<std::int64_t>> table(q + 1, std::vector<std::int64_t>(k + 1, 0));
	table[0][0] = 1;
	for (int p = 1; p <= q; ++p)
		for (long m = p; m <= k; ++m)
			table[p][m] = table[p][m - p] + table[p - 1][m - 1];
	return table[q][k];
}

}  // namespace mfil
