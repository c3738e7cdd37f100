// Reproduces the cut/graft counting for the triple
//   a = (* *), b = {*, *, (* *)}, c = ((((* *) *) (* *)) *)
// and prints both sides of n * s_c = m * s_a * s_b.

#include <iostream>

#include "binhopf.hpp"

int main()
{
    using namespace binhopf;

    const Forest a = parse_forest("(* *)");
    const Forest b = parse_forest("*, *, (* *)");
    const Forest c = parse_forest("((((* *) *) (* *)) *)");

    const DualityReport r = duality_check(a, b, c);
    std::cout << "coefficient of c in a * b      n = " << r.n_count << '\n'
              << "coefficient of b (x) a in D(c) m = " << r.m_count << '\n'
              << "n * s_c = " << r.lhs << ", m * s_a * s_b = " << r.rhs << '\n';

    std::cout << "\nW(*) up to degree 5:\n" << to_string(prelie_exponential(5)) << '\n';
    return r.pass ? 0 : 1;
}
