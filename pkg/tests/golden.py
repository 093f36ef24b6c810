"""Reference values shared by the test suites."""

P2 = 0.4522474200410654985
ARTIN_A1 = 0.3739558136192022880547280
CATALAN = 0.915965594177219015
ZETA3 = 1.2020569031595942854
B_CHI3 = 0.1449809353580

B_PSI = complex(0.34645514515465, 0.21283903970350)
B_PSI_SQUARED = 0.12284254160167

GOLDEN_THEORY = (0.100000, 0.418205, 0.296724, 0.0950872, 0.0899840)
SECOND_THEORY = (0.100000, 0.451872, 0.266393, 0.0995570, 0.0821785)
GOLDEN_OBSERVED = (0.100093, 0.419351, 0.296954, 0.0947177, 0.0888838)
SECOND_OBSERVED = (0.099787, 0.450979, 0.267518, 0.0996599, 0.0820564)
