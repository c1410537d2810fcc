import java.util.ArrayList;
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
