def collatz_steps(n: int) -> int:
    if n < 1:
        return 0
    steps = 0
    k = n
    while k != 1 and steps < 100:
        k = k // 2 if k % 2 == 0 else 3 * k + 1
        steps += 1
    return steps
