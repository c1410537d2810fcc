def next_collatz(k):
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
