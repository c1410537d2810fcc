def is_odd(k):
    return k % 2 != 0


def odds_list(n):
    found = []
    for i in range(n):
        if is_odd(i):
            found.append(i)
    return found
