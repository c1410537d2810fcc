public static List<Integer> getEvens(int max) {
    List<Integer> evens = new ArrayList<Integer>();
    for (int i = 0; i < max; i++) {
        if (i % 2 == 0) {
            evens.add(i);
        }
    }
    return evens;
}
