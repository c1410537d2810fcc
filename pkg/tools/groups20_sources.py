"""Source table for the 20-group evaluation fixture.

Each group is one behavior implemented six ways: three Python variants and
three Java variants (a plain loop, an alternative formulation, and a
helper-split version whose helper has the same meaning in both languages).
`java_refs` holds Python callables mirroring each Java method exactly on
the profiled input domain (ints in [-256, 256]); they stand in for a JVM
when recording the replay store.

Correctness rules baked into every Java source, so the mirrors are honest:
division and modulo only on values that are non-negative (or provably
exact, like consecutive-integer products), no 32-bit overflow anywhere on
the probed domain, and bit operations only where Java and Python agree.
"""

import dataclasses
from typing import Callable


@dataclasses.dataclass(frozen=True)
class Group:
    name: str
    files: dict[str, str]
    java_refs: dict[tuple[str, str], Callable]


GROUPS: list[Group] = []

# Files deliberately left out of the recorded replay store, so index builds
# exercise the unexecutable-snippet path.
OMITTED = ("digit_sum/java_loop.java", "sign_label/java_alt.java")


def _add(name, files, java_refs):
    GROUPS.append(Group(name=name, files=files, java_refs=java_refs))


# --- reference behaviors (shared by Java mirrors and sanity checks) ------------


def _sum_below(n):
    return n * (n - 1) // 2 if n > 0 else 0


def _half_product(m):
    return m * (m - 1) // 2


def _factorial_small(n):
    result = 1
    for i in range(2, min(n, 12) + 1):
        result *= i
    return result


def _clamp_twelve(k):
    return min(k, 12)


def _evens(n):
    return [i for i in range(n) if i % 2 == 0]


def _is_even(k):
    return k % 2 == 0


def _odds(n):
    return [i for i in range(n) if i % 2 != 0]


def _is_odd(k):
    return k % 2 != 0


def _squares(n):
    return [i * i for i in range(n)]


def _square(k):
    return k * k


def _fib_clamped(n):
    if n < 0:
        return 0
    k = min(n, 40)
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _clamp_forty(k):
    return min(k, 40)


def _digit_sum(n):
    m = abs(n)
    total = 0
    while m > 0:
        total += m % 10
        m //= 10
    return total


def _last_digit(k):
    return abs(k) % 10


def _reverse_digits(n):
    m = abs(n)
    rev = 0
    while m > 0:
        rev = rev * 10 + m % 10
        m //= 10
    return -rev if n < 0 else rev


def _strip_sign(k):
    return abs(k)


def _collatz_steps(n):
    if n < 1:
        return 0
    steps = 0
    k = n
    while k != 1 and steps < 100:
        k = k // 2 if k % 2 == 0 else 3 * k + 1
        steps += 1
    return steps


def _next_collatz(k):
    if k < 1:
        return 0
    return k // 2 if k % 2 == 0 else 3 * k + 1


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _first_factor(k):
    if k < 2:
        return 1
    i = 2
    while i * i <= k:
        if k % i == 0:
            return i
        i += 1
    return k


def _count_divisors(n):
    m = abs(n)
    if m == 0:
        return 0
    return sum(1 for i in range(1, m + 1) if m % i == 0)


def _abs_value(k):
    return abs(k)


def _gcd_twelve(n):
    a, b = abs(n), 12
    while b:
        a, b = b, a % b
    return a


def _remainder_by_twelve(k):
    return (k % 12 + 12) % 12


def _triangular(n):
    return n * (n + 1) // 2 if n > 0 else 0


def _double_t(k):
    return k * (k + 1)


def _power_of_two(n):
    return n > 0 and (n & (n - 1)) == 0


def _lowest_bit_cleared(k):
    return k & (k - 1)


def _binary_ones(n):
    if n <= 0:
        return 0
    count = 0
    k = n
    while k > 0:
        count += k & 1
        k >>= 1
    return count


def _halve(k):
    return k >> 1


def _char_repeat(n):
    return "ab" * min(max(n, 0), 10)


def _clamp_count(k):
    return min(max(k, 0), 10)


def _range_pairs(n):
    k = min(max(n, 0), 6)
    return {i: i * i for i in range(k)}


def _square_of(k):
    return k * k


def _cumulative(n):
    out = []
    total = 0
    for i in range(n):
        total += i
        out.append(total)
    return out


def _partial_sum(k):
    return k * (k - 1) // 2


def _abs_diff_100(n):
    return abs(n - 100)


def _shift_base(k):
    return k - 100


def _sign_label(n):
    if n < 0:
        return "negative"
    if n == 0:
        return "zero"
    return "positive"


def _sign_of(k):
    if k < 0:
        return -1
    if k == 0:
        return 0
    return 1


# --- 1. sum_below ----------------------------------------------------------------

_add(
    "sum_below",
    {
        "py_loop.py": '''def sum_below(n: int) -> int:
    total = 0
    for i in range(n):
        total += i
    return total
''',
        "py_alt.py": '''def sum_below(n):
    """Sum of the integers in [0, n)."""
    m = n if n > 0 else 0
    return m * (m - 1) // 2
''',
        "py_split.py": '''def half_product(m):
    return m * (m - 1) // 2


def sum_below(n):
    if n <= 0:
        return 0
    return half_product(n)
''',
        "java_loop.java": '''static int sumBelow(int n) {
    int total = 0;
    for (int i = 0; i < n; i++) {
        total += i;
    }
    return total;
}
''',
        "java_alt.java": '''static int sumBelow(int n) {
    int m = n > 0 ? n : 0;
    return m * (m - 1) / 2;
}
''',
        "java_split.java": '''static int halfProduct(int m) {
    return m * (m - 1) / 2;
}

static int sumBelow(int n) {
    if (n <= 0) {
        return 0;
    }
    return halfProduct(n);
}
''',
    },
    {
        ("java_loop.java", "sumBelow"): _sum_below,
        ("java_alt.java", "sumBelow"): _sum_below,
        ("java_split.java", "sumBelow"): _sum_below,
        ("java_split.java", "halfProduct"): _half_product,
    },
)

# --- 2. factorial_small ------------------------------------------------------------

_add(
    "factorial_small",
    {
        "py_loop.py": '''def factorial_small(n: int) -> int:
    result = 1
    for i in range(2, min(n, 12) + 1):
        result *= i
    return result
''',
        "py_alt.py": '''from math import factorial


def factorial_small(n):
    k = min(n, 12)
    if k < 1:
        return 1
    return factorial(k)
''',
        "py_split.py": '''def clamp_twelve(k):
    if k > 12:
        return 12
    return k


def factorial_small(n):
    result = 1
    for i in range(2, clamp_twelve(n) + 1):
        result *= i
    return result
''',
        "java_loop.java": '''static int factorialSmall(int n) {
    int result = 1;
    int top = n > 12 ? 12 : n;
    for (int i = 2; i <= top; i++) {
        result *= i;
    }
    return result;
}
''',
        "java_alt.java": '''static int factorialSmall(int n) {
    int k = n > 12 ? 12 : n;
    int result = 1;
    while (k > 1) {
        result *= k;
        k--;
    }
    return result;
}
''',
        "java_split.java": '''static int clampTwelve(int k) {
    return k > 12 ? 12 : k;
}

static int factorialSmall(int n) {
    int result = 1;
    for (int i = 2; i <= clampTwelve(n); i++) {
        result *= i;
    }
    return result;
}
''',
    },
    {
        ("java_loop.java", "factorialSmall"): _factorial_small,
        ("java_alt.java", "factorialSmall"): _factorial_small,
        ("java_split.java", "factorialSmall"): _factorial_small,
        ("java_split.java", "clampTwelve"): _clamp_twelve,
    },
)

# --- 3. evens_list -----------------------------------------------------------------

_add(
    "evens_list",
    {
        "py_loop.py": '''def evens_list(n: int) -> list:
    found = []
    for i in range(n):
        if i % 2 == 0:
            found.append(i)
    return found
''',
        "py_alt.py": '''def evens_list(n):
    return [i for i in range(n) if i % 2 == 0]
''',
        "py_split.py": '''def is_even(k):
    return k % 2 == 0


def evens_list(n):
    return [i for i in range(n) if is_even(i)]
''',
        "java_loop.java": '''import java.util.ArrayList;
import java.util.List;

class EvensList {
    static List<Integer> evensList(int n) {
        List<Integer> found = new ArrayList<Integer>();
        for (int i = 0; i < n; i++) {
            if (i % 2 == 0) {
                found.add(i);
            }
        }
        return found;
    }
}
''',
        "java_alt.java": '''import java.util.ArrayList;
import java.util.List;

static List<Integer> evensList(int n) {
    List<Integer> found = new ArrayList<Integer>();
    int i = 0;
    while (i < n) {
        found.add(i);
        i += 2;
    }
    return found;
}
''',
        "java_split.java": '''import java.util.ArrayList;
import java.util.List;

static boolean isEven(int k) {
    return k % 2 == 0;
}

static List<Integer> evensList(int n) {
    List<Integer> found = new ArrayList<Integer>();
    for (int i = 0; i < n; i++) {
        if (isEven(i)) {
            found.add(i);
        }
    }
    return found;
}
''',
    },
    {
        ("java_loop.java", "evensList"): _evens,
        ("java_alt.java", "evensList"): _evens,
        ("java_split.java", "evensList"): _evens,
        ("java_split.java", "isEven"): _is_even,
    },
)

# --- 4. odds_list ------------------------------------------------------------------

_add(
    "odds_list",
    {
        "py_loop.py": '''def odds_list(n: int) -> list:
    found = []
    for i in range(n):
        if i % 2 != 0:
            found.append(i)
    return found
''',
        "py_alt.py": '''def odds_list(n):
    """Odd integers in [0, n)."""
    return list(range(1, n, 2))
''',
        "py_split.py": '''def is_odd(k):
    return k % 2 != 0


def odds_list(n):
    found = []
    for i in range(n):
        if is_odd(i):
            found.append(i)
    return found
''',
        "java_loop.java": '''import java.util.ArrayList;
import java.util.List;

static List<Integer> oddsList(int n) {
    List<Integer> found = new ArrayList<Integer>();
    for (int i = 0; i < n; i++) {
        if (i % 2 != 0) {
            found.add(i);
        }
    }
    return found;
}
''',
        "java_alt.java": '''import java.util.ArrayList;
import java.util.List;

static List<Integer> oddsList(int n) {
    List<Integer> found = new ArrayList<Integer>();
    int i = 1;
    while (i < n) {
        found.add(i);
        i += 2;
    }
    return found;
}
''',
        "java_split.java": '''import java.util.ArrayList;
import java.util.List;

class OddsList {
    static boolean isOdd(int k) {
        return k % 2 != 0;
    }

    static List<Integer> oddsList(int n) {
        List<Integer> found = new ArrayList<Integer>();
        for (int i = 0; i < n; i++) {
            if (isOdd(i)) {
                found.add(i);
            }
        }
        return found;
    }
}
''',
    },
    {
        ("java_loop.java", "oddsList"): _odds,
        ("java_alt.java", "oddsList"): _odds,
        ("java_split.java", "oddsList"): _odds,
        ("java_split.java", "isOdd"): _is_odd,
    },
)

# --- 5. squares_list ---------------------------------------------------------------

_add(
    "squares_list",
    {
        "py_loop.py": '''def squares_list(n: int) -> list:
    values = []
    for i in range(n):
        values.append(i * i)
    return values
''',
        "py_alt.py": '''def squares_list(n):
    return [i * i for i in range(n)]
''',
        "py_split.py": '''def square(k):
    return k * k


def squares_list(n):
    return [square(i) for i in range(n)]
''',
        "java_loop.java": '''import java.util.ArrayList;
import java.util.List;

static List<Integer> squaresList(int n) {
    List<Integer> values = new ArrayList<Integer>();
    for (int i = 0; i < n; i++) {
        values.add(i * i);
    }
    return values;
}
''',
        "java_alt.java": '''import java.util.ArrayList;
import java.util.List;

static List<Integer> squaresList(int n) {
    List<Integer> values = new ArrayList<Integer>();
    int i = 0;
    while (i < n) {
        values.add(i * i);
        i++;
    }
    return values;
}
''',
        "java_split.java": '''import java.util.ArrayList;
import java.util.List;

static int square(int k) {
    return k * k;
}

static List<Integer> squaresList(int n) {
    List<Integer> values = new ArrayList<Integer>();
    for (int i = 0; i < n; i++) {
        values.add(square(i));
    }
    return values;
}
''',
    },
    {
        ("java_loop.java", "squaresList"): _squares,
        ("java_alt.java", "squaresList"): _squares,
        ("java_split.java", "squaresList"): _squares,
        ("java_split.java", "square"): _square,
    },
)

# --- 6. fib_clamped ----------------------------------------------------------------

_add(
    "fib_clamped",
    {
        "py_loop.py": '''def fib_clamped(n: int) -> int:
    if n < 0:
        return 0
    k = min(n, 40)
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a
''',
        "py_alt.py": '''def fib_clamped(n):
    if n < 0:
        return 0
    k = 40 if n > 40 else n
    prev, cur = 0, 1
    i = 0
    while i < k:
        prev, cur = cur, prev + cur
        i += 1
    return prev
''',
        "py_split.py": '''def clamp_forty(k):
    if k > 40:
        return 40
    return k


def fib_clamped(n):
    if n < 0:
        return 0
    a, b = 0, 1
    for _ in range(clamp_forty(n)):
        a, b = b, a + b
    return a
''',
        "java_loop.java": '''static int fibClamped(int n) {
    if (n < 0) {
        return 0;
    }
    int k = n < 40 ? n : 40;
    int a = 0;
    int b = 1;
    for (int i = 0; i < k; i++) {
        int next = a + b;
        a = b;
        b = next;
    }
    return a;
}
''',
        "java_alt.java": '''static int fibClamped(int n) {
    if (n < 0) {
        return 0;
    }
    int k = n > 40 ? 40 : n;
    int prev = 0;
    int cur = 1;
    int i = 0;
    while (i < k) {
        int next = prev + cur;
        prev = cur;
        cur = next;
        i++;
    }
    return prev;
}
''',
        "java_split.java": '''static int clampForty(int k) {
    return k > 40 ? 40 : k;
}

static int fibClamped(int n) {
    if (n < 0) {
        return 0;
    }
    int a = 0;
    int b = 1;
    for (int i = 0; i < clampForty(n); i++) {
        int next = a + b;
        a = b;
        b = next;
    }
    return a;
}
''',
    },
    {
        ("java_loop.java", "fibClamped"): _fib_clamped,
        ("java_alt.java", "fibClamped"): _fib_clamped,
        ("java_split.java", "fibClamped"): _fib_clamped,
        ("java_split.java", "clampForty"): _clamp_forty,
    },
)

# --- 7. digit_sum ------------------------------------------------------------------

_add(
    "digit_sum",
    {
        "py_loop.py": '''def digit_sum(n: int) -> int:
    m = abs(n)
    total = 0
    while m > 0:
        total += m % 10
        m //= 10
    return total
''',
        "py_alt.py": '''def digit_sum(n):
    return sum(int(ch) for ch in str(abs(n)))
''',
        "py_split.py": '''def last_digit(k):
    return abs(k) % 10


def digit_sum(n):
    m = abs(n)
    total = 0
    while m > 0:
        total += last_digit(m)
        m //= 10
    return total
''',
        "java_loop.java": '''static int digitSum(int n) {
    int m = n < 0 ? -n : n;
    int total = 0;
    while (m > 0) {
        total += m % 10;
        m = m / 10;
    }
    return total;
}
''',
        "java_alt.java": '''static int digitSum(int n) {
    String text = Integer.toString(n < 0 ? -n : n);
    int total = 0;
    for (int i = 0; i < text.length(); i++) {
        total += text.charAt(i) - '0';
    }
    return total;
}
''',
        "java_split.java": '''static int lastDigit(int k) {
    return Math.abs(k) % 10;
}

static int digitSum(int n) {
    int m = n < 0 ? -n : n;
    int total = 0;
    while (m > 0) {
        total += lastDigit(m);
        m = m / 10;
    }
    return total;
}
''',
    },
    {
        ("java_loop.java", "digitSum"): _digit_sum,
        ("java_alt.java", "digitSum"): _digit_sum,
        ("java_split.java", "digitSum"): _digit_sum,
        ("java_split.java", "lastDigit"): _last_digit,
    },
)

# --- 8. reverse_digits -------------------------------------------------------------

_add(
    "reverse_digits",
    {
        "py_loop.py": '''def reverse_digits(n: int) -> int:
    m = abs(n)
    rev = 0
    while m > 0:
        rev = rev * 10 + m % 10
        m //= 10
    return -rev if n < 0 else rev
''',
        "py_alt.py": '''def reverse_digits(n):
    text = str(abs(n))[::-1]
    rev = int(text)
    return -rev if n < 0 else rev
''',
        "py_split.py": '''def strip_sign(k):
    return abs(k)


def reverse_digits(n):
    m = strip_sign(n)
    rev = 0
    while m > 0:
        rev = rev * 10 + m % 10
        m //= 10
    if n < 0:
        return -rev
    return rev
''',
        "java_loop.java": '''static int reverseDigits(int n) {
    int m = n < 0 ? -n : n;
    int rev = 0;
    while (m > 0) {
        rev = rev * 10 + m % 10;
        m = m / 10;
    }
    return n < 0 ? -rev : rev;
}
''',
        "java_alt.java": '''static int reverseDigits(int n) {
    String text = Integer.toString(n < 0 ? -n : n);
    int rev = 0;
    for (int i = text.length() - 1; i >= 0; i--) {
        rev = rev * 10 + (text.charAt(i) - '0');
    }
    return n < 0 ? -rev : rev;
}
''',
        "java_split.java": '''static int stripSign(int k) {
    return Math.abs(k);
}

static int reverseDigits(int n) {
    int m = stripSign(n);
    int rev = 0;
    while (m > 0) {
        rev = rev * 10 + m % 10;
        m = m / 10;
    }
    if (n < 0) {
        return -rev;
    }
    return rev;
}
''',
    },
    {
        ("java_loop.java", "reverseDigits"): _reverse_digits,
        ("java_alt.java", "reverseDigits"): _reverse_digits,
        ("java_split.java", "reverseDigits"): _reverse_digits,
        ("java_split.java", "stripSign"): _strip_sign,
    },
)

# --- 9. collatz_steps --------------------------------------------------------------

_add(
    "collatz_steps",
    {
        "py_loop.py": '''def collatz_steps(n: int) -> int:
    if n < 1:
        return 0
    steps = 0
    k = n
    while k != 1 and steps < 100:
        k = k // 2 if k % 2 == 0 else 3 * k + 1
        steps += 1
    return steps
''',
        "py_alt.py": '''def collatz_steps(n):
    if n < 1:
        return 0
    steps = 0
    k = n
    while k != 1:
        if steps >= 100:
            break
        if k % 2 == 0:
            k //= 2
        else:
            k = 3 * k + 1
        steps += 1
    return steps
''',
        "py_split.py": '''def next_collatz(k):
    if k < 1:
        return 0
    if k % 2 == 0:
        return k // 2
    return 3 * k + 1


def collatz_steps(n):
    if n < 1:
        return 0
    steps = 0
    k = n
    while k != 1 and steps < 100:
        k = next_collatz(k)
        steps += 1
    return steps
''',
        "java_loop.java": '''static int collatzSteps(int n) {
    if (n < 1) {
        return 0;
    }
    int steps = 0;
    int k = n;
    while (k != 1 && steps < 100) {
        if (k % 2 == 0) {
            k = k / 2;
        } else {
            k = 3 * k + 1;
        }
        steps++;
    }
    return steps;
}
''',
        "java_alt.java": '''static int collatzSteps(int n) {
    if (n < 1) {
        return 0;
    }
    int steps = 0;
    int k = n;
    while (k != 1) {
        if (steps >= 100) {
            break;
        }
        k = k % 2 == 0 ? k / 2 : 3 * k + 1;
        steps++;
    }
    return steps;
}
''',
        "java_split.java": '''static int nextCollatz(int k) {
    if (k < 1) {
        return 0;
    }
    if (k % 2 == 0) {
        return k / 2;
    }
    return 3 * k + 1;
}

static int collatzSteps(int n) {
    if (n < 1) {
        return 0;
    }
    int steps = 0;
    int k = n;
    while (k != 1 && steps < 100) {
        k = nextCollatz(k);
        steps++;
    }
    return steps;
}
''',
    },
    {
        ("java_loop.java", "collatzSteps"): _collatz_steps,
        ("java_alt.java", "collatzSteps"): _collatz_steps,
        ("java_split.java", "collatzSteps"): _collatz_steps,
        ("java_split.java", "nextCollatz"): _next_collatz,
    },
)

# --- 10. is_prime ------------------------------------------------------------------

_add(
    "is_prime",
    {
        "py_loop.py": '''def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True
''',
        "py_alt.py": '''def is_prime(n):
    return n >= 2 and all(n % i for i in range(2, int(n ** 0.5) + 1))
''',
        "py_split.py": '''def first_factor(k):
    if k < 2:
        return 1
    i = 2
    while i * i <= k:
        if k % i == 0:
            return i
        i += 1
    return k


def is_prime(n):
    return n >= 2 and first_factor(n) == n
''',
        "java_loop.java": '''static boolean isPrime(int n) {
    if (n < 2) {
        return false;
    }
    int i = 2;
    while (i * i <= n) {
        if (n % i == 0) {
            return false;
        }
        i++;
    }
    return true;
}
''',
        "java_alt.java": '''static boolean isPrime(int n) {
    if (n < 2) {
        return false;
    }
    for (int i = 2; i * i <= n; i++) {
        if (n % i == 0) {
            return false;
        }
    }
    return true;
}
''',
        "java_split.java": '''static int firstFactor(int k) {
    if (k < 2) {
        return 1;
    }
    for (int i = 2; i * i <= k; i++) {
        if (k % i == 0) {
            return i;
        }
    }
    return k;
}

static boolean isPrime(int n) {
    return n >= 2 && firstFactor(n) == n;
}
''',
    },
    {
        ("java_loop.java", "isPrime"): _is_prime,
        ("java_alt.java", "isPrime"): _is_prime,
        ("java_split.java", "isPrime"): _is_prime,
        ("java_split.java", "firstFactor"): _first_factor,
    },
)

# --- 11. count_divisors ------------------------------------------------------------

_add(
    "count_divisors",
    {
        "py_loop.py": '''def count_divisors(n: int) -> int:
    m = abs(n)
    if m == 0:
        return 0
    count = 0
    for i in range(1, m + 1):
        if m % i == 0:
            count += 1
    return count
''',
        "py_alt.py": '''def count_divisors(n):
    m = abs(n)
    if m == 0:
        return 0
    return sum(1 for i in range(1, m + 1) if m % i == 0)
''',
        "py_split.py": '''def abs_value(k):
    return abs(k)


def count_divisors(n):
    m = abs_value(n)
    if m == 0:
        return 0
    count = 0
    for i in range(1, m + 1):
        if m % i == 0:
            count += 1
    return count
''',
        "java_loop.java": '''static int countDivisors(int n) {
    int m = n < 0 ? -n : n;
    if (m == 0) {
        return 0;
    }
    int count = 0;
    for (int i = 1; i <= m; i++) {
        if (m % i == 0) {
            count++;
        }
    }
    return count;
}
''',
        "java_alt.java": '''static int countDivisors(int n) {
    int m = n < 0 ? -n : n;
    if (m == 0) {
        return 0;
    }
    int count = 0;
    int i = 1;
    while (i <= m) {
        if (m % i == 0) {
            count++;
        }
        i++;
    }
    return count;
}
''',
        "java_split.java": '''static int absValue(int k) {
    return Math.abs(k);
}

static int countDivisors(int n) {
    int m = absValue(n);
    if (m == 0) {
        return 0;
    }
    int count = 0;
    for (int i = 1; i <= m; i++) {
        if (m % i == 0) {
            count++;
        }
    }
    return count;
}
''',
    },
    {
        ("java_loop.java", "countDivisors"): _count_divisors,
        ("java_alt.java", "countDivisors"): _count_divisors,
        ("java_split.java", "countDivisors"): _count_divisors,
        ("java_split.java", "absValue"): _abs_value,
    },
)

# --- 12. gcd_twelve ----------------------------------------------------------------

_add(
    "gcd_twelve",
    {
        "py_loop.py": '''def gcd_twelve(n: int) -> int:
    a = abs(n)
    b = 12
    while b:
        a, b = b, a % b
    return a
''',
        "py_alt.py": '''import math


def gcd_twelve(n):
    return math.gcd(abs(n), 12)
''',
        "py_split.py": '''def remainder_by_twelve(k):
    return (k % 12 + 12) % 12


def gcd_twelve(n):
    a = 12
    b = remainder_by_twelve(n)
    while b:
        a, b = b, a % b
    return a
''',
        "java_loop.java": '''static int gcdTwelve(int n) {
    int a = n < 0 ? -n : n;
    int b = 12;
    while (b != 0) {
        int r = a % b;
        a = b;
        b = r;
    }
    return a;
}
''',
        "java_alt.java": '''static int gcdTwelve(int n) {
    int a = n < 0 ? -n : n;
    int b = 12;
    int r = a % b;
    while (r != 0) {
        a = b;
        b = r;
        r = a % b;
    }
    return b;
}
''',
        "java_split.java": '''static int remainderByTwelve(int k) {
    return (k % 12 + 12) % 12;
}

static int gcdTwelve(int n) {
    int a = 12;
    int b = remainderByTwelve(n);
    while (b != 0) {
        int r = a % b;
        a = b;
        b = r;
    }
    return a;
}
''',
    },
    {
        ("java_loop.java", "gcdTwelve"): _gcd_twelve,
        ("java_alt.java", "gcdTwelve"): _gcd_twelve,
        ("java_split.java", "gcdTwelve"): _gcd_twelve,
        ("java_split.java", "remainderByTwelve"): _remainder_by_twelve,
    },
)

# --- 13. triangular ----------------------------------------------------------------

_add(
    "triangular",
    {
        "py_loop.py": '''def triangular(n: int) -> int:
    total = 0
    for i in range(1, n + 1):
        total += i
    return total
''',
        "py_alt.py": '''def triangular(n):
    return n * (n + 1) // 2 if n > 0 else 0
''',
        "py_split.py": '''def double_t(k):
    return k * (k + 1)


def triangular(n):
    if n <= 0:
        return 0
    return double_t(n) // 2
''',
        "java_loop.java": '''static int triangular(int n) {
    int total = 0;
    for (int i = 1; i <= n; i++) {
        total += i;
    }
    return total;
}
''',
        "java_alt.java": '''static int triangular(int n) {
    return n > 0 ? n * (n + 1) / 2 : 0;
}
''',
        "java_split.java": '''static int doubleT(int k) {
    return k * (k + 1);
}

static int triangular(int n) {
    if (n <= 0) {
        return 0;
    }
    return doubleT(n) / 2;
}
''',
    },
    {
        ("java_loop.java", "triangular"): _triangular,
        ("java_alt.java", "triangular"): _triangular,
        ("java_split.java", "triangular"): _triangular,
        ("java_split.java", "doubleT"): _double_t,
    },
)

# --- 14. power_of_two --------------------------------------------------------------

_add(
    "power_of_two",
    {
        "py_loop.py": '''def power_of_two(n: int) -> bool:
    if n <= 0:
        return False
    ones = 0
    k = n
    while k > 0:
        ones += k & 1
        k >>= 1
    return ones == 1
''',
        "py_alt.py": '''def power_of_two(n):
    return n > 0 and (n & (n - 1)) == 0
''',
        "py_split.py": '''def lowest_bit_cleared(k):
    return k & (k - 1)


def power_of_two(n):
    return n > 0 and lowest_bit_cleared(n) == 0
''',
        "java_loop.java": '''static boolean powerOfTwo(int n) {
    if (n <= 0) {
        return false;
    }
    int ones = 0;
    int k = n;
    while (k > 0) {
        ones += k & 1;
        k = k >> 1;
    }
    return ones == 1;
}
''',
        "java_alt.java": '''static boolean powerOfTwo(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}
''',
        "java_split.java": '''static int lowestBitCleared(int k) {
    return k & (k - 1);
}

static boolean powerOfTwo(int n) {
    return n > 0 && lowestBitCleared(n) == 0;
}
''',
    },
    {
        ("java_loop.java", "powerOfTwo"): _power_of_two,
        ("java_alt.java", "powerOfTwo"): _power_of_two,
        ("java_split.java", "powerOfTwo"): _power_of_two,
        ("java_split.java", "lowestBitCleared"): _lowest_bit_cleared,
    },
)

# --- 15. binary_ones ---------------------------------------------------------------

_add(
    "binary_ones",
    {
        "py_loop.py": '''def binary_ones(n: int) -> int:
    if n <= 0:
        return 0
    count = 0
    k = n
    while k > 0:
        count += k & 1
        k >>= 1
    return count
''',
        "py_alt.py": '''def binary_ones(n):
    if n <= 0:
        return 0
    return bin(n).count("1")
''',
        "py_split.py": '''def halve(k):
    return k >> 1


def binary_ones(n):
    count = 0
    k = n
    while k > 0:
        count += k & 1
        k = halve(k)
    return count
''',
        "java_loop.java": '''static int binaryOnes(int n) {
    if (n <= 0) {
        return 0;
    }
    int count = 0;
    int k = n;
    while (k > 0) {
        count += k & 1;
        k = k >> 1;
    }
    return count;
}
''',
        "java_alt.java": '''static int binaryOnes(int n) {
    int count = 0;
    for (int k = n; k > 0; k = k >> 1) {
        count += k & 1;
    }
    return count;
}
''',
        "java_split.java": '''static int halve(int k) {
    return k >> 1;
}

static int binaryOnes(int n) {
    int count = 0;
    int k = n;
    while (k > 0) {
        count += k & 1;
        k = halve(k);
    }
    return count;
}
''',
    },
    {
        ("java_loop.java", "binaryOnes"): _binary_ones,
        ("java_alt.java", "binaryOnes"): _binary_ones,
        ("java_split.java", "binaryOnes"): _binary_ones,
        ("java_split.java", "halve"): _halve,
    },
)

# --- 16. char_repeat ---------------------------------------------------------------

_add(
    "char_repeat",
    {
        "py_loop.py": '''def char_repeat(n: int) -> str:
    k = min(max(n, 0), 10)
    text = ""
    for _ in range(k):
        text += "ab"
    return text
''',
        "py_alt.py": '''def char_repeat(n):
    return "ab" * min(max(n, 0), 10)
''',
        "py_split.py": '''def clamp_count(k):
    if k < 0:
        return 0
    if k > 10:
        return 10
    return k


def char_repeat(n):
    return "ab" * clamp_count(n)
''',
        "java_loop.java": '''static String charRepeat(int n) {
    int k = n;
    if (k < 0) {
        k = 0;
    }
    if (k > 10) {
        k = 10;
    }
    StringBuilder text = new StringBuilder();
    for (int i = 0; i < k; i++) {
        text.append("ab");
    }
    return text.toString();
}
''',
        "java_alt.java": '''static String charRepeat(int n) {
    int k = n > 10 ? 10 : n;
    String out = "";
    for (int i = 0; i < k; i++) {
        out = out + "ab";
    }
    return out;
}
''',
        "java_split.java": '''static int clampCount(int k) {
    if (k < 0) {
        return 0;
    }
    if (k > 10) {
        return 10;
    }
    return k;
}

static String charRepeat(int n) {
    StringBuilder text = new StringBuilder();
    for (int i = 0; i < clampCount(n); i++) {
        text.append("ab");
    }
    return text.toString();
}
''',
    },
    {
        ("java_loop.java", "charRepeat"): _char_repeat,
        ("java_alt.java", "charRepeat"): _char_repeat,
        ("java_split.java", "charRepeat"): _char_repeat,
        ("java_split.java", "clampCount"): _clamp_count,
    },
)

# --- 17. range_pairs ---------------------------------------------------------------

_add(
    "range_pairs",
    {
        "py_loop.py": '''def range_pairs(n: int) -> dict:
    k = min(max(n, 0), 6)
    pairs = {}
    for i in range(k):
        pairs[i] = i * i
    return pairs
''',
        "py_alt.py": '''def range_pairs(n):
    k = min(max(n, 0), 6)
    return {i: i * i for i in range(k)}
''',
        "py_split.py": '''def square_of(k):
    return k * k


def range_pairs(n):
    k = min(max(n, 0), 6)
    return {i: square_of(i) for i in range(k)}
''',
        "java_loop.java": '''import java.util.HashMap;
import java.util.Map;

static Map<Integer, Integer> rangePairs(int n) {
    int k = n;
    if (k < 0) {
        k = 0;
    }
    if (k > 6) {
        k = 6;
    }
    Map<Integer, Integer> pairs = new HashMap<Integer, Integer>();
    for (int i = 0; i < k; i++) {
        pairs.put(i, i * i);
    }
    return pairs;
}
''',
        "java_alt.java": '''import java.util.HashMap;
import java.util.Map;

static Map<Integer, Integer> rangePairs(int n) {
    int k = n > 6 ? 6 : n;
    Map<Integer, Integer> pairs = new HashMap<Integer, Integer>();
    int i = 0;
    while (i < k) {
        pairs.put(i, i * i);
        i++;
    }
    return pairs;
}
''',
        "java_split.java": '''import java.util.HashMap;
import java.util.Map;

class RangePairs {
    static int squareOf(int k) {
        return k * k;
    }

    static Map<Integer, Integer> rangePairs(int n) {
        int k = n;
        if (k < 0) {
            k = 0;
        }
        if (k > 6) {
            k = 6;
        }
        Map<Integer, Integer> pairs = new HashMap<Integer, Integer>();
        for (int i = 0; i < k; i++) {
            pairs.put(i, squareOf(i));
        }
        return pairs;
    }
}
''',
    },
    {
        ("java_loop.java", "rangePairs"): _range_pairs,
        ("java_alt.java", "rangePairs"): _range_pairs,
        ("java_split.java", "rangePairs"): _range_pairs,
        ("java_split.java", "squareOf"): _square_of,
    },
)

# --- 18. cumulative_list -------------------------------------------------------------

_add(
    "cumulative_list",
    {
        "py_loop.py": '''def cumulative_list(n: int) -> list:
    sums = []
    total = 0
    for i in range(n):
        total += i
        sums.append(total)
    return sums
''',
        "py_alt.py": '''from itertools import accumulate


def cumulative_list(n):
    return list(accumulate(range(n)))
''',
        "py_split.py": '''def partial_sum(k):
    return k * (k - 1) // 2


def cumulative_list(n):
    return [partial_sum(i + 1) for i in range(n)]
''',
        "java_loop.java": '''import java.util.ArrayList;
import java.util.List;

static List<Integer> cumulativeList(int n) {
    List<Integer> sums = new ArrayList<Integer>();
    int total = 0;
    for (int i = 0; i < n; i++) {
        total += i;
        sums.add(total);
    }
    return sums;
}
''',
        "java_alt.java": '''import java.util.ArrayList;
import java.util.List;

static List<Integer> cumulativeList(int n) {
    List<Integer> sums = new ArrayList<Integer>();
    int i = 0;
    int total = 0;
    while (i < n) {
        total = total + i;
        sums.add(total);
        i++;
    }
    return sums;
}
''',
        "java_split.java": '''import java.util.ArrayList;
import java.util.List;

static int partialSum(int k) {
    return k * (k - 1) / 2;
}

static List<Integer> cumulativeList(int n) {
    List<Integer> sums = new ArrayList<Integer>();
    for (int i = 0; i < n; i++) {
        sums.add(partialSum(i + 1));
    }
    return sums;
}
''',
    },
    {
        ("java_loop.java", "cumulativeList"): _cumulative,
        ("java_alt.java", "cumulativeList"): _cumulative,
        ("java_split.java", "cumulativeList"): _cumulative,
        ("java_split.java", "partialSum"): _partial_sum,
    },
)

# --- 19. abs_diff_100 ---------------------------------------------------------------

_add(
    "abs_diff_100",
    {
        "py_loop.py": '''def abs_diff_100(n: int) -> int:
    d = n - 100
    if d < 0:
        d = -d
    return d
''',
        "py_alt.py": '''def abs_diff_100(n):
    return abs(n - 100)
''',
        "py_split.py": '''def shift_base(k):
    return k - 100


def abs_diff_100(n):
    d = shift_base(n)
    if d < 0:
        return -d
    return d
''',
        "java_loop.java": '''static int absDiff100(int n) {
    int d = n - 100;
    if (d < 0) {
        d = -d;
    }
    return d;
}
''',
        "java_alt.java": '''static int absDiff100(int n) {
    return Math.abs(n - 100);
}
''',
        "java_split.java": '''static int shiftBase(int k) {
    return k - 100;
}

static int absDiff100(int n) {
    int d = shiftBase(n);
    return d < 0 ? -d : d;
}
''',
    },
    {
        ("java_loop.java", "absDiff100"): _abs_diff_100,
        ("java_alt.java", "absDiff100"): _abs_diff_100,
        ("java_split.java", "absDiff100"): _abs_diff_100,
        ("java_split.java", "shiftBase"): _shift_base,
    },
)

# --- 20. sign_label ----------------------------------------------------------------

_add(
    "sign_label",
    {
        "py_loop.py": '''def sign_label(n: int) -> str:
    if n < 0:
        return "negative"
    elif n == 0:
        return "zero"
    return "positive"
''',
        "py_alt.py": '''def sign_label(n):
    return "negative" if n < 0 else ("zero" if n == 0 else "positive")
''',
        "py_split.py": '''def sign_of(k):
    if k < 0:
        return -1
    if k == 0:
        return 0
    return 1


def sign_label(n):
    s = sign_of(n)
    if s < 0:
        return "negative"
    if s == 0:
        return "zero"
    return "positive"
''',
        "java_loop.java": '''static String signLabel(int n) {
    if (n < 0) {
        return "negative";
    }
    if (n == 0) {
        return "zero";
    }
    return "positive";
}
''',
        "java_alt.java": '''static String signLabel(int n) {
    return n < 0 ? "negative" : (n == 0 ? "zero" : "positive");
}
''',
        "java_split.java": '''static int signOf(int k) {
    if (k < 0) {
        return -1;
    }
    if (k == 0) {
        return 0;
    }
    return 1;
}

static String signLabel(int n) {
    int s = signOf(n);
    if (s < 0) {
        return "negative";
    }
    if (s == 0) {
        return "zero";
    }
    return "positive";
}
''',
    },
    {
        ("java_loop.java", "signLabel"): _sign_label,
        ("java_alt.java", "signLabel"): _sign_label,
        ("java_split.java", "signLabel"): _sign_label,
        ("java_split.java", "signOf"): _sign_of,
    },
)
